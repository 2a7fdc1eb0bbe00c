/* Pointer initialized with the address it is read through. */

#include <stdio.h>

int main () {
	int var = 20;
	int *ptr_a = &var;
	printf("Value: %d\n", *ptr_a);

   	return 0;
}

