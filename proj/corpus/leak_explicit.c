/* Block allocated and used in main, never released. */

#include <stdio.h>
#include <stdlib.h>

int main(){
	int *p = malloc(sizeof(int));
	if(!p) return -1;
	*p = 5;
	printf("Value: %d\n", *p);
	return 0;
}
