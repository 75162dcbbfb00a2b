#include <stdio.h>
#include "brace_dend.h"

int main(void) {
    BdElement *a = NULL, *b = NULL, *p = NULL;
    char *s = NULL;
    if (bd_element_parse("a", 2, &a) != BD_STATUS_OK) return 1;
    if (bd_element_parse("b", 2, &b) != BD_STATUS_OK) return 1;
    if (bd_element_star(a, b, &p) != BD_STATUS_OK) return 1;
    bd_element_to_string(p, &s);
    printf("a*b = %s\n", s);
    bd_string_free(s);
    if (bd_element_parse("a<(", 2, &a) != BD_STATUS_OK)
        printf("error: %s\n", bd_last_error());
    bd_element_free(a);
    bd_element_free(b);
    bd_element_free(p);
    return 0;
}
