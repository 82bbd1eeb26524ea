#include "common.h"

static volatile __u64 seen;

SEC("tracepoint/syscalls/sys_enter_close")
int count_close(void *ctx)
{
	seen++;
	return 0;
}

char LICENSE[] SEC("license") = "GPL";
