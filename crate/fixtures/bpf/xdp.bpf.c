#include "common.h"

/* Synthetic packet context: first two words are length and protocol. */
struct pkt_ctx {
	__u32 len;
	__u32 proto;
};

struct {
	__uint(type, BPF_MAP_TYPE_ARRAY);
	__uint(max_entries, 2);
	__type(key, __u32);
	__type(value, __u64);
} pkts SEC(".maps");

SEC("xdp")
int xdp_count(struct pkt_ctx *ctx)
{
	__u32 idx = ctx->proto == 6 ? 1 : 0;
	__u64 *cnt;

	cnt = bpf_map_lookup_elem(&pkts, &idx);
	if (cnt)
		*cnt += ctx->len;
	/* XDP_DROP for empty packets, XDP_PASS otherwise */
	return ctx->len ? 2 : 1;
}

char LICENSE[] SEC("license") = "GPL";
