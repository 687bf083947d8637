#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "schurlab.h"

int main(void) {
    uint32_t parts[2] = {2, 0};
    char *poly = NULL;
    assert(sl_schur_render(parts, 2, &poly) == SL_STATUS_OK);
    assert(strcmp(poly, "u1 + u2") == 0);
    sl_string_free(poly);

    SlVerifyReport *report = NULL;
    assert(sl_verify_cauchy("1,2", "1,3", 3, &report) == SL_STATUS_OK);
    assert(sl_verify_report_match(report));
    char *coeff = NULL;
    assert(sl_verify_report_coeff(report, 3, &coeff) == SL_STATUS_OK);
    assert(strcmp(coeff, "194") == 0);
    sl_string_free(coeff);
    sl_verify_report_free(report);

    SlPreserveReport *scan = NULL;
    assert(sl_preserve_power(0.5, 3, "1", "1", 60, &scan) == SL_STATUS_MISMATCH);
    assert(sl_preserve_report_violation_count(scan) > 0);
    sl_preserve_report_free(scan);

    bool admissible = true;
    size_t tuple[2] = {0, 2};
    assert(sl_admissible_tuple("exp", 2, tuple, 2, &admissible) == SL_STATUS_OK);
    assert(!admissible);

    printf("c smoke: ok\n");
    return 0;
}
