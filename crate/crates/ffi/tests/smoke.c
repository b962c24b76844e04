#include <stdio.h>
#include <string.h>
#include "gradlie.h"

#define CHECK(c) do { if (!(c)) { fprintf(stderr, "failed: %s\n", #c); return 1; } } while (0)

int main(void) {
    GradlieAlgebra *g = NULL;
    CHECK(gradlie_algebra_build("sp21", 0, &g) == GRADLIE_STATUS_OK);
    size_t dim = 0;
    CHECK(gradlie_algebra_dim(g, &dim) == GRADLIE_STATUS_OK && dim == 21);
    size_t dims[5], needed = 0;
    CHECK(gradlie_algebra_component_dims(g, dims, 5, &needed) == GRADLIE_STATUS_OK);
    CHECK(needed == 5 && dims[2] == 7);
    bool ok = false;
    CHECK(gradlie_algebra_validate(g, &ok) == GRADLIE_STATUS_OK && ok);
    char *json = NULL;
    CHECK(gradlie_algebra_to_json(g, &json) == GRADLIE_STATUS_OK);
    GradlieAlgebra *h = NULL;
    CHECK(gradlie_algebra_from_json(json, &h) == GRADLIE_STATUS_OK);
    gradlie_string_free(json);
    gradlie_algebra_free(h);
    gradlie_algebra_free(g);

    CHECK(gradlie_algebra_build("nope", 0, &g) == GRADLIE_STATUS_INVALID_INPUT);
    CHECK(strlen(gradlie_last_error()) > 0);
    printf("ok %s\n", gradlie_version());
    return 0;
}
