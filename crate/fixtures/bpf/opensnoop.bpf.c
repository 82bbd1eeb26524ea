#include "common.h"

/* Synthetic sys_enter_openat context. */
struct openat_ctx {
	__u64 id;
	__s64 dfd;
	char filename[32];
	__s64 flags;
};

struct event {
	__u32 pid;
	__s32 flags;
	char fname[32];
};

struct {
	__uint(type, BPF_MAP_TYPE_RINGBUF);
	__uint(max_entries, 16384);
} events SEC(".maps");

SEC("tracepoint/syscalls/sys_enter_openat")
int trace_openat(struct openat_ctx *ctx)
{
	struct event *e;

	e = bpf_ringbuf_reserve(&events, sizeof(*e), 0);
	if (!e)
		return 0;
	e->pid = bpf_get_current_pid_tgid() >> 32;
	e->flags = ctx->flags;
	__builtin_memcpy(e->fname, ctx->filename, sizeof(e->fname));
	if (e->fname[0] == 0) {
		bpf_ringbuf_discard(e, 0);
		return 0;
	}
	bpf_ringbuf_submit(e, 0);
	return 0;
}

char LICENSE[] SEC("license") = "GPL";
