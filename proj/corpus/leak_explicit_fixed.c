/* Block allocated, used and released in main. */

#include <stdio.h>
#include <stdlib.h>

int main(){
	int *p = malloc(sizeof(int));
	if(!p) return -1;
	*p = 5;
	printf("Value: %d\n", *p);
	free(p);
	return 0;
}
