/* Pointer initialized to NULL, overwritten before any read. */

#include <stdio.h>

int main () {
	int var = 20;
	int *ptr_a = NULL;
	
	ptr_a = &var;
	printf("Value: %d\n", *ptr_a);

   	return 0;
}
