/* Allocation sized with sizeof(*ptr) returned to a caller that never
 * releases it. */

#include <stdio.h>
#include <stdlib.h>

typedef struct st{
   int value;
}st;

st * create(int value){
   st *new = malloc(sizeof(*new));
   if(new == NULL) return NULL;
   new -> value = value;
   return new;
}

int main(){	
    st *new = create(5);
    printf("Value: %p\n", (void *) new);
    return 0;
}
