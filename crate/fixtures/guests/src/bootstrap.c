/* Loads bootstrap.bpf.o, attaches handle_exec and prints every exec
 * event from the ring buffer until the host asks it to stop. */
#include "wasm_bpf.h"
#include "bootstrap.obj.h"

struct event {
	u32 pid;
	u32 pad;
	u64 ts;
	char comm[16];
};

static u64 handle;
static int rb_fd;
static u64 seen;
static u8 buf[64];

static int print_event(void *ctx, void *data, u32 size)
{
	const struct event *e = data;

	out_str("exec pid=");
	out_dec(e->pid);
	out_str(" ts=");
	out_dec(e->ts);
	out_str(" comm=");
	out_strn(e->comm, sizeof(e->comm));
	out_str(" (");
	out_hex(data, size);
	out_str(")\n");
	out_flush();
	return 0;
}

static int count_event(void *ctx, void *data, u32 size)
{
	seen++;
	return 0;
}

/* Load and attach; returns the ring buffer fd or a negative code. */
EXPORT("setup") int setup(void)
{
	int err;

	handle = wasm_load_bpf_object(bootstrap_obj, sizeof(bootstrap_obj));
	if (!handle)
		return -1000;
	err = wasm_attach_bpf_program(handle, "handle_exec", "");
	if (err < 0)
		return err;
	rb_fd = wasm_bpf_map_fd_by_name(handle, "rb");
	return rb_fd;
}

/* Deliver pending events without printing; returns how many. */
EXPORT("drain") int drain(int timeout_ms)
{
	int n = wasm_bpf_buffer_poll(handle, rb_fd, count_event, 0, buf, sizeof(buf), timeout_ms);

	return n < 0 ? n : (int)seen;
}

EXPORT("_start") void _start(void)
{
	int fd = setup();
	int n;

	if (fd < 0) {
		out_str("bootstrap: setup failed: ");
		out_int(fd);
		out_char('\n');
		out_flush();
		wasi_proc_exit(1);
	}
	for (;;) {
		n = wasm_bpf_buffer_poll(handle, rb_fd, print_event, 0, buf, sizeof(buf), 100);
		if (n == WASM_BPF_INTERRUPTED)
			break;
		if (n < 0) {
			out_str("bootstrap: poll failed: ");
			out_int(n);
			out_char('\n');
			out_flush();
			wasi_proc_exit(1);
		}
	}
	wasm_close_bpf_object(handle);
}
