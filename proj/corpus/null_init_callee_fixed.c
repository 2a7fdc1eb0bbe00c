/* Pointer returned by another function is checked before the store. */

#include <stdio.h>

int *get_ptr(void) {
	return NULL;
}

int main () {
	int *p = get_ptr();
	if (p)
		*p = 1;
	return 0;
}
