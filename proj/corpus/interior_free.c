/* Pointer into the middle of a block passed to free. */

#include <stdlib.h>

int main(){
	char *buf = malloc(8);
	char *p;
	if(!buf) return -1;
	p = buf + 4;
	*p = 0;
	free(p);
	return 0;
}
