/* Compiled as C to keep the public header C-compatible. */
#include <math.h>
#include <stddef.h>

#include "angspace/angspace.h"

int angsp_c_smoke(void) {
    angsp_weight* w = NULL;
    angsp_angle a;
    angsp_vec2 x = {1.0, 0.0};
    angsp_vec2 y = {1.0, 1.0};
    int rc = 0;

    if (angsp_weight_parse("lp:1", &w) != ANGSP_OK) return 1;
    if (angsp_thy_angle(w, x, y, NULL, &a) != ANGSP_OK) rc = 2;
    else if (!a.csb_ok || fabs(a.value - acos(0.75)) > 1e-12) rc = 3;
    angsp_weight_free(w);
    return rc;
}
