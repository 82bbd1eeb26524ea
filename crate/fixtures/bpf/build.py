#!/usr/bin/env python3
"""Rebuild eBPF fixtures and their manifests.

Compiles every *.bpf.c with clang (-target bpf -O2 -g) and writes a
<name>.manifest next to each object. The manifest is derived by walking
the ELF, BTF and BTF.ext structures directly in this script, so it stays
independent of the Rust parser it is used to check.

Usage: python3 build.py [--no-compile] [--dump NAME]
"""
import glob
import os
import struct
import subprocess
import sys

HERE = os.path.dirname(os.path.abspath(__file__))

PREFIXES = [
    ("kprobe/", "kprobe"), ("kretprobe/", "kprobe"),
    ("uprobe/", "uprobe"), ("uretprobe/", "uprobe"),
    ("tracepoint/", "tracepoint"), ("tp/", "tracepoint"),
    ("xdp", "xdp"), ("sockops", "sockops"), ("lsm/", "lsm"),
    ("socket", "socket_filter"),
]
MAP_TYPES = {1: "hash", 2: "array", 4: "perf_event_array", 27: "ringbuf"}


def sections(data):
    shoff, = struct.unpack_from("<Q", data, 0x28)
    shentsize, shnum, shstrndx = struct.unpack_from("<HHH", data, 0x3A)
    out = []
    for i in range(shnum):
        name, typ, flags, addr, off, size, link, info, align, entsize = struct.unpack_from(
            "<IIQQQQIIQQ", data, shoff + i * shentsize)
        out.append(dict(idx=i, name_off=name, type=typ, flags=flags, off=off,
                        size=size, link=link, info=info, entsize=entsize))
    strtab = out[shstrndx]
    for s in out:
        s["name"] = cstr(data, strtab["off"] + s["name_off"])
    return out


def cstr(data, off):
    end = data.index(b"\0", off)
    return data[off:end].decode()


def symbols(data, secs):
    symtab = next(s for s in secs if s["type"] == 2)
    strtab = secs[symtab["link"]]
    syms = []
    for i in range(symtab["size"] // 24):
        name, info, other, shndx, value, size = struct.unpack_from(
            "<IBBHQQ", data, symtab["off"] + i * 24)
        syms.append(dict(name=cstr(data, strtab["off"] + name), type=info & 0xF,
                         bind=info >> 4, shndx=shndx, value=value, size=size))
    return syms


def btf_types(blob):
    magic, ver, flags, hdr_len, type_off, type_len, str_off, str_len = struct.unpack_from(
        "<HBBIIIII", blob, 0)
    assert magic == 0xEB9F
    base = hdr_len + type_off
    pos, end = base, base + type_len
    strs = blob[hdr_len + str_off: hdr_len + str_off + str_len]
    types = []
    while pos < end:
        name_off, info, size_type = struct.unpack_from("<III", blob, pos)
        kind = (info >> 24) & 0x1F
        vlen = info & 0xFFFF
        pos += 12
        extra = {1: 4, 3: 12, 4: 12 * vlen, 5: 12 * vlen, 6: 8 * vlen, 13: 8 * vlen,
                 14: 4, 15: 12 * vlen, 17: 4, 19: 12 * vlen}.get(kind, 0)
        name = strs[name_off:strs.index(b"\0", name_off)].decode()
        raw = blob[pos:pos + extra]
        types.append((kind, name, size_type, vlen, raw))
        pos += extra
    return types, strs


def core_relo_count(ext):
    magic, ver, flags, hdr_len = struct.unpack_from("<HBBI", ext, 0)
    if hdr_len < 32:
        return 0
    core_off, core_len = struct.unpack_from("<II", ext, 24)
    pos = hdr_len + core_off
    end = pos + core_len
    if core_len == 0:
        return 0
    rec_size, = struct.unpack_from("<I", ext, pos)
    pos += 4
    total = 0
    while pos < end:
        sec_name, num = struct.unpack_from("<II", ext, pos)
        pos += 8 + num * rec_size
        total += num
    return total


def prog_type(section):
    for prefix, kind in PREFIXES:
        if section.startswith(prefix):
            return kind
    return None


def manifest(path):
    data = open(path, "rb").read()
    secs = sections(data)
    syms = symbols(data, secs)
    byidx = {s["idx"]: s for s in secs}
    lines = []
    progs = []
    for s in secs:
        kind = prog_type(s["name"])
        if s["type"] == 1 and s["flags"] & 0x4 and kind and s["size"] > 0:
            for sym in syms:
                if sym["shndx"] == s["idx"] and sym["type"] == 2:
                    progs.append((sym["name"], s["name"], kind, sym["size"] // 8))
    maps = []
    maps_sec = next((s for s in secs if s["name"] == ".maps"), None)
    if maps_sec:
        for sym in syms:
            if sym["shndx"] == maps_sec["idx"] and sym["type"] == 1:
                maps.append(sym["name"])
    lines.append("programs = %d" % len(progs))
    lines.append("maps = %d" % len(maps))
    for name, sec, kind, n in progs:
        lines.append("program %s %s %s insns=%d" % (name, sec, kind, n))
    btf = next((s for s in secs if s["name"] == ".BTF"), None)
    if btf:
        blob = data[btf["off"]:btf["off"] + btf["size"]]
        types, strs = btf_types(blob)
        for m in maps:
            lines.append("map %s %s" % (m, map_kind(types, strs, m)))
        lines.append("btf_types = %d" % len(types))
    ext = next((s for s in secs if s["name"] == ".BTF.ext"), None)
    if ext:
        lines.append("core_relos = %d" % core_relo_count(data[ext["off"]:ext["off"] + ext["size"]]))
    legacy = any(s["name"] == "maps" for s in secs)
    if legacy:
        lines.append("legacy_maps = true")
    return "\n".join(lines) + "\n"


def map_kind(types, strs, name):
    # VAR `name` -> STRUCT; member `type` -> PTR -> ARRAY whose nelems is the map type
    def get(tid):
        return types[tid - 1]
    for kind, tname, size_type, vlen, raw in types:
        if kind == 14 and tname == name:
            st = get(size_type)
            for i in range(st[3]):
                mname, mtype, moff = struct.unpack_from("<III", st[4], i * 12)
                if strs[mname:strs.index(b"\0", mname)] == b"type":
                    arr = get(get(mtype)[2])
                    nelems, = struct.unpack_from("<I", arr[4], 8)
                    return MAP_TYPES.get(nelems, "type%d" % nelems)
    return "unknown"


def main():
    os.chdir(HERE)
    if "--no-compile" not in sys.argv:
        for src in sorted(glob.glob("*.bpf.c")):
            obj = src[:-2] + ".o"
            subprocess.check_call(["clang", "-target", "bpf", "-O2", "-g", "-c", src, "-o", obj])
    for obj in sorted(glob.glob("*.bpf.o")):
        with open(obj[:-6] + ".manifest", "w") as f:
            f.write("# generated by build.py from %s\n" % obj)
            f.write(manifest(obj))


if __name__ == "__main__":
    main()
