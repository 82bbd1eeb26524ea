#include "common.h"

/* Local view of a kernel structure; target kernels may lay it out differently. */
struct task_info {
	__u32 pid;
	__u64 start_time;
	__u32 tgid;
	char comm[16];
} __attribute__((preserve_access_index));

struct {
	__uint(type, BPF_MAP_TYPE_RINGBUF);
	__uint(max_entries, 4096);
} out SEC(".maps");

struct sample {
	__u64 tgid;
	__u64 start_time;
	__u64 has_tgid;
};

SEC("tracepoint/sched/sched_switch")
int read_task(struct task_info *t)
{
	struct sample s;

	s.tgid = t->tgid;
	s.start_time = t->start_time;
	s.has_tgid = __builtin_preserve_field_info(t->tgid, 2);
	bpf_ringbuf_output(&out, &s, sizeof(s), 0);
	return t->tgid;
}

char LICENSE[] SEC("license") = "GPL";
