/* Guest-side declarations for the wasm_bpf host ABI plus the few WASI
 * calls and output helpers the guests use. Freestanding: no libc. */
#ifndef WASM_BPF_H
#define WASM_BPF_H

typedef unsigned char u8;
typedef unsigned int u32;
typedef unsigned long long u64;
typedef long long i64;

#define IMPORT(mod, name) __attribute__((import_module(mod), import_name(name)))
#define EXPORT(name) __attribute__((export_name(name)))

IMPORT("wasm_bpf", "wasm_load_bpf_object") u64 wasm_load_bpf_object(const void *obj, int size);
IMPORT("wasm_bpf", "wasm_close_bpf_object") int wasm_close_bpf_object(u64 handle);
IMPORT("wasm_bpf", "wasm_attach_bpf_program") int wasm_attach_bpf_program(u64 handle, const char *name, const char *target);
IMPORT("wasm_bpf", "wasm_bpf_buffer_poll")
int wasm_bpf_buffer_poll(u64 handle, int fd, int (*sample)(void *ctx, void *data, u32 size), void *ctx, void *data, int max_size, int timeout_ms);
IMPORT("wasm_bpf", "wasm_bpf_map_fd_by_name") int wasm_bpf_map_fd_by_name(u64 handle, const char *name);
IMPORT("wasm_bpf", "wasm_bpf_map_operate")
int wasm_bpf_map_operate(int fd, int cmd, void *key, void *value, void *next_key, u64 flags);

#define BPF_MAP_LOOKUP_ELEM 1
#define BPF_MAP_UPDATE_ELEM 2
#define BPF_MAP_DELETE_ELEM 3
#define BPF_MAP_GET_NEXT_KEY 4

#define WASM_BPF_INTERRUPTED (-6)

struct ciovec {
	const void *buf;
	u32 len;
};

IMPORT("wasi_snapshot_preview1", "fd_write") int wasi_fd_write(int fd, const struct ciovec *iovs, int n, u32 *written);
IMPORT("wasi_snapshot_preview1", "proc_exit") __attribute__((noreturn)) void wasi_proc_exit(int code);

/* Line buffer flushed to stdout by out_flush(). */
static char out_buf[512];
static u32 out_len;

static void out_flush(void)
{
	struct ciovec iov = { out_buf, out_len };
	u32 n;

	wasi_fd_write(1, &iov, 1, &n);
	out_len = 0;
}

static void out_char(char c)
{
	if (out_len == sizeof(out_buf))
		out_flush();
	out_buf[out_len++] = c;
}

static void out_str(const char *s)
{
	while (*s)
		out_char(*s++);
}

/* At most n bytes, stopping at NUL. */
static void out_strn(const char *s, u32 n)
{
	for (u32 i = 0; i < n && s[i]; i++)
		out_char(s[i]);
}

static void out_dec(u64 v)
{
	char tmp[20];
	int i = 0;

	do {
		tmp[i++] = '0' + v % 10;
		v /= 10;
	} while (v);
	while (i)
		out_char(tmp[--i]);
}

static void out_int(int v)
{
	if (v < 0) {
		out_char('-');
		out_dec(-(i64)v);
	} else {
		out_dec(v);
	}
}

static void out_hex(const u8 *p, u32 n)
{
	static const char digits[] = "0123456789abcdef";

	for (u32 i = 0; i < n; i++) {
		out_char(digits[p[i] >> 4]);
		out_char(digits[p[i] & 15]);
	}
}

#endif
