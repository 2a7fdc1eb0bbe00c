/* Local variable assigned before it is read. */

#include <stdio.h>

int main(){
	int x = 1;
	int y;
	y = x;
	printf("Value: %d\n", y);
	return 0;
}
