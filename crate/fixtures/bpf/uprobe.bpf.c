#include "common.h"

struct {
	__uint(type, BPF_MAP_TYPE_HASH);
	__uint(max_entries, 128);
	__type(key, __u32);
	__type(value, __u64);
} lens SEC(".maps");

SEC("uprobe/readline")
int uprobe_readline(struct pt_regs *ctx)
{
	__u32 pid = bpf_get_current_pid_tgid() >> 32;
	__u64 len = PT_REGS_PARM2(ctx);

	bpf_map_update_elem(&lens, &pid, &len, BPF_ANY);
	return 0;
}

char LICENSE[] SEC("license") = "GPL";
