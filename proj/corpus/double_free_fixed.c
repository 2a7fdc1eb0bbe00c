/* Block released once. */

#include <stdio.h>
#include <stdlib.h>

int main(){
	int *p = malloc(sizeof(int));
	if(!p) return -1;
	*p = 1;
	printf("Value: %d\n", *p);
	free(p);
	return 0;
}
