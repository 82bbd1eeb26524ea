/* Target kernel types for CO-RE fixtures: older layout, tgid present but moved. */
struct task_info {
	unsigned int tgid;
	unsigned int pid;
	unsigned long long start_time;
	char comm[16];
};

struct task_info task_anchor;
