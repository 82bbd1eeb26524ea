#include "common.h"

/* Synthetic sched_process_exec context supplied by the event source. */
struct exec_ctx {
	__u32 pid;
	__u32 ppid;
	char comm[16];
};

struct event {
	__u32 pid;
	__u64 ts;
	char comm[16];
};

struct {
	__uint(type, BPF_MAP_TYPE_RINGBUF);
	__uint(max_entries, 256 * 1024);
} rb SEC(".maps");

SEC("tracepoint/sched/sched_process_exec")
int handle_exec(struct exec_ctx *ctx)
{
	struct event *e;

	e = bpf_ringbuf_reserve(&rb, sizeof(*e), 0);
	if (!e)
		return 0;
	e->pid = ctx->pid;
	e->ts = bpf_ktime_get_ns();
	__builtin_memcpy(e->comm, ctx->comm, sizeof(e->comm));
	bpf_ringbuf_submit(e, 0);
	return 0;
}

char LICENSE[] SEC("license") = "Dual BSD/GPL";
