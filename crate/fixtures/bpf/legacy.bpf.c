#include "common.h"

struct bpf_map_def {
	unsigned int type;
	unsigned int key_size;
	unsigned int value_size;
	unsigned int max_entries;
	unsigned int map_flags;
};

struct bpf_map_def SEC("maps") old_counts = {
	.type = BPF_MAP_TYPE_HASH,
	.key_size = 4,
	.value_size = 8,
	.max_entries = 16,
};

SEC("kprobe/do_sys_open")
int legacy_prog(void *ctx)
{
	__u32 k = 0;

	bpf_map_lookup_elem(&old_counts, &k);
	return 0;
}

char LICENSE[] SEC("license") = "GPL";
