/* Block released through its base pointer. */

#include <stdlib.h>

int main(){
	char *buf = malloc(8);
	char *p;
	if(!buf) return -1;
	p = buf + 4;
	*p = 0;
	free(buf);
	return 0;
}
