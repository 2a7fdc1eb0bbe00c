/* Local variable read before any assignment. */

#include <stdio.h>

int main(){
	int x;
	int y;
	y = x;
	printf("Value: %d\n", y);
	return 0;
}
