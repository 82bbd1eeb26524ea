#include "common.h"

struct {
	__uint(type, BPF_MAP_TYPE_HASH);
	__uint(max_entries, 1024);
	__type(key, __u32);
	__type(value, __u64);
} counts SEC(".maps");

struct {
	__uint(type, BPF_MAP_TYPE_ARRAY);
	__uint(max_entries, 4);
	__type(key, __u32);
	__type(value, __u64);
} stats SEC(".maps");

SEC("tracepoint/syscalls/sys_enter_openat")
int update_then_lookup(void *ctx)
{
	__u32 key = 1;
	__u64 val = 7;
	__u64 *p;

	bpf_map_update_elem(&counts, &key, &val, BPF_ANY);
	p = bpf_map_lookup_elem(&counts, &key);
	if (!p)
		return 0;
	return *p;
}

SEC("tracepoint/syscalls/sys_enter_openat")
int count_events(void *ctx)
{
	__u32 idx = 0;
	__u64 *p;

	p = bpf_map_lookup_elem(&stats, &idx);
	if (!p)
		return 1;
	*p += 1;
	return 0;
}

char LICENSE[] SEC("license") = "GPL";
