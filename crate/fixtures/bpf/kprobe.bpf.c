#include "common.h"

struct args {
	__u64 arg[5];
};

struct {
	__uint(type, BPF_MAP_TYPE_RINGBUF);
	__uint(max_entries, 4096);
} events SEC(".maps");

SEC("kprobe/do_unlinkat")
int trace_unlinkat(struct pt_regs *ctx)
{
	struct args a;

	a.arg[0] = PT_REGS_PARM1(ctx);
	a.arg[1] = PT_REGS_PARM2(ctx);
	a.arg[2] = PT_REGS_PARM3(ctx);
	a.arg[3] = PT_REGS_PARM4(ctx);
	a.arg[4] = PT_REGS_PARM5(ctx);
	bpf_ringbuf_output(&events, &a, sizeof(a), 0);
	return 0;
}

char LICENSE[] SEC("license") = "GPL";
