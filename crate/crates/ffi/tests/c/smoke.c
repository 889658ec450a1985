/* SPDX-License-Identifier: Apache-2.0 */
#include <stdio.h>
#include <string.h>

#include "deutsch_paths.h"

int main(void) {
    DeutschSequence *seq = NULL;
    if (deutsch_count_paths(3, 1, 0, DEUTSCH_UNBOUNDED, DEUTSCH_METHOD_CLOSED, &seq) != DEUTSCH_STATUS_OK) {
        return 10;
    }
    int64_t value = 0;
    if (deutsch_sequence_get_i64(seq, 0, &value) != DEUTSCH_STATUS_OK || value != 3) {
        return 11;
    }
    deutsch_sequence_free(seq);

    if (deutsch_series(0, 1, 2, 6, DEUTSCH_METHOD_DP, &seq) != DEUTSCH_STATUS_OK) {
        return 12;
    }
    char buf[32];
    size_t needed = 0;
    for (size_t i = 0; i < deutsch_sequence_len(seq); i++) {
        if (deutsch_sequence_get_decimal(seq, i, buf, sizeof buf, &needed) != DEUTSCH_STATUS_OK) {
            return 13;
        }
        printf("%s%s", i ? "," : "", buf);
    }
    printf("\n");
    deutsch_sequence_free(seq);

    if (deutsch_series(5, 0, 3, 4, DEUTSCH_METHOD_DP, &seq) != DEUTSCH_STATUS_INVALID_ARGUMENT || seq != NULL) {
        return 14;
    }
    printf("%s\n", deutsch_status_message(DEUTSCH_STATUS_INVALID_ARGUMENT));
    return 0;
}
