#!/usr/bin/env python3
"""Rebuild the Wasm guests.

Each src/<name>.c is compiled freestanding for wasm32 with the matching
eBPF fixture embedded as a byte array (src/<name>.obj.h, generated).

Usage: python3 build.py
"""
import os
import subprocess

HERE = os.path.dirname(os.path.abspath(__file__))
BPF = os.path.join(HERE, "..", "bpf")
GUESTS = {"bootstrap": "bootstrap.bpf.o", "maps": "maps.bpf.o"}


def embed(name, obj):
    data = open(os.path.join(BPF, obj), "rb").read()
    rows = [", ".join("0x%02x" % b for b in data[i:i + 16]) for i in range(0, len(data), 16)]
    body = ",\n\t".join(rows)
    path = os.path.join(HERE, "src", name + ".obj.h")
    with open(path, "w") as f:
        f.write("/* generated by build.py from %s */\n" % obj)
        f.write("static const unsigned char %s_obj[] __attribute__((aligned(8))) = {\n\t%s\n};\n" % (name, body))


def main():
    for name, obj in GUESTS.items():
        embed(name, obj)
        out = os.path.join(HERE, name + ".wasm")
        subprocess.check_call([
            "clang", "--target=wasm32", "-O2", "-nostdlib", "-ffreestanding",
            "-Wall", "-Wno-unused-function",
            "-Wl,--no-entry", "-Wl,--export-table", "-Wl,--strip-all",
            "-Wl,-z,stack-size=65536",
            "-o", out, os.path.join(HERE, "src", name + ".c"),
        ])
        print("%s: %d bytes" % (out, os.path.getsize(out)))


if __name__ == "__main__":
    main()
