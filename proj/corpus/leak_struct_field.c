/* Structure released while one of its fields still owns a block.
 */

#include <stdio.h>
#include <stdlib.h>

typedef struct st{
   int *value;
}st;

int main(){	
    st *new = malloc(sizeof(st));
	if(!new) return -1;
	new->value = malloc(sizeof(int));
	/*if(!new->value){
		free(new);
		return -1;
	}*/
	free(new);
	return 0;
}
