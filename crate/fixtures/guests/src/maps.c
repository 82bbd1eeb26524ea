/* Loads maps.bpf.o and drives its hash map from the guest: fills it,
 * enumerates the keys, and exposes a map round trip for benchmarks. */
#include "wasm_bpf.h"
#include "maps.obj.h"

static u64 handle;
static int counts_fd;
static int stats_fd;

EXPORT("setup") int setup(void)
{
	handle = wasm_load_bpf_object(maps_obj, sizeof(maps_obj));
	if (!handle)
		return -1000;
	counts_fd = wasm_bpf_map_fd_by_name(handle, "counts");
	stats_fd = wasm_bpf_map_fd_by_name(handle, "stats");
	if (counts_fd < 0)
		return counts_fd;
	return stats_fd;
}

/* `iters` rounds of update + lookup on one key; returns the final value or a negative code. */
EXPORT("map_roundtrip") i64 map_roundtrip(int iters)
{
	u32 key = 42;
	u64 value = 0, out = 0;
	int err;

	for (int i = 0; i < iters; i++) {
		value = i;
		err = wasm_bpf_map_operate(counts_fd, BPF_MAP_UPDATE_ELEM, &key, &value, 0, 0);
		if (err)
			return err;
		err = wasm_bpf_map_operate(counts_fd, BPF_MAP_LOOKUP_ELEM, &key, &out, 0, 0);
		if (err)
			return err;
	}
	return out;
}

EXPORT("attach_all") int attach_all(void)
{
	int a = wasm_attach_bpf_program(handle, "update_then_lookup", "");
	int b = wasm_attach_bpf_program(handle, "count_events", "");

	return a < 0 ? a : b;
}

/* Value of stats[0], as bumped by count_events. */
EXPORT("event_count") i64 event_count(void)
{
	u32 idx = 0;
	u64 v = 0;
	int err = wasm_bpf_map_operate(stats_fd, BPF_MAP_LOOKUP_ELEM, &idx, &v, 0, 0);

	return err ? err : (i64)v;
}

EXPORT("_start") void _start(void)
{
	u32 key, next;
	u64 value;
	int err, n = 0;

	err = setup();
	if (err < 0) {
		out_str("maps: setup failed: ");
		out_int(err);
		out_char('\n');
		out_flush();
		wasi_proc_exit(1);
	}
	for (key = 1; key <= 5; key++) {
		value = key * 100;
		wasm_bpf_map_operate(counts_fd, BPF_MAP_UPDATE_ELEM, &key, &value, 0, 0);
	}
	err = wasm_bpf_map_operate(counts_fd, BPF_MAP_GET_NEXT_KEY, 0, 0, &next, 0);
	while (!err) {
		wasm_bpf_map_operate(counts_fd, BPF_MAP_LOOKUP_ELEM, &next, &value, 0, 0);
		out_str("key=");
		out_dec(next);
		out_str(" value=");
		out_dec(value);
		out_char('\n');
		n++;
		key = next;
		err = wasm_bpf_map_operate(counts_fd, BPF_MAP_GET_NEXT_KEY, &key, 0, &next, 0);
	}
	out_str("keys=");
	out_dec(n);
	out_char('\n');
	out_flush();
	wasm_close_bpf_object(handle);
}
