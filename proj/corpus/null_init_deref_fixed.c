/* Pointer initialized to a valid address before the store. */

#include <stdio.h>

int main () {
	int value = 0;
	int *p = &value;
	*p = 1;
	printf("Value: %d\n", value);
	return 0;
}
