/* Target kernel types for CO-RE fixtures: tgid removed. */
struct task_info {
	unsigned int pid;
	unsigned long long start_time;
	char comm[16];
};

struct task_info task_anchor;
