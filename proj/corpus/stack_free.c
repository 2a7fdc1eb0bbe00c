/* Address of a local variable passed to free. */

#include <stdlib.h>

int main(){
	int x;
	free(&x);
	return 0;
}
