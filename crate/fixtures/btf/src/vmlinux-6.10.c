/* Target kernel types for CO-RE fixtures: newer layout with inserted fields. */
struct task_info {
	unsigned long long start_time;
	unsigned int flags;
	unsigned int pid;
	char comm[16];
	unsigned long long utime;
	unsigned int tgid;
};

struct event {
	unsigned int pid;
	unsigned long long ts;
	char comm[16];
};

struct with_ptr {
	unsigned int pid;
	struct task_info *task;
};

struct task_info task_anchor;
struct event event_anchor;
struct with_ptr with_ptr_anchor;
