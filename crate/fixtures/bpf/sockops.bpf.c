#include "common.h"

struct sock_ops_ctx {
	__u32 op;
	__u32 reply;
	__u32 family;
	__u32 remote_ip4;
	__u32 local_ip4;
	__u32 remote_port;
	__u32 local_port;
};

struct {
	__uint(type, BPF_MAP_TYPE_ARRAY);
	__uint(max_entries, 16);
	__type(key, __u32);
	__type(value, __u64);
} ops SEC(".maps");

SEC("sockops")
int count_sockops(struct sock_ops_ctx *skops)
{
	__u32 op = skops->op & 15;
	__u64 *cnt;

	cnt = bpf_map_lookup_elem(&ops, &op);
	if (cnt)
		*cnt += 1;
	skops->reply = 1;
	return 1;
}

char LICENSE[] SEC("license") = "GPL";
