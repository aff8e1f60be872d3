/* cc -Icrates/ffi/include crates/ffi/examples/velocity.c target/release/libmevac_ffi.a -lm -lpthread -ldl */
#include <stdio.h>
#include "mevac.h"

int main(void) {
    const double chi[9] = {0, 1e-4, 0, -1e-4, 0, 0, 0, 0, 0};
    MevacMaterial *glass = NULL;
    MevacStatus s = mevac_material_new(2.25, 1.0, chi, 1.0, &glass);
    if (s != MEVAC_STATUS_OK) {
        fprintf(stderr, "material: %s\n", mevac_status_message(s));
        return 1;
    }

    MevacTransformed t;
    s = mevac_transform_constants(glass, 0.1, &t);
    if (s == MEVAC_STATUS_OK)
        printf("eps' = %.17g  mu' = %.17g  n' = %.17g\n", t.epsilon_prime, t.mu_prime, t.index_prime);

    MevacFields f = {{1, 0, 0}, {0, 1, 0}};
    MevacVelocity v;
    s = mevac_medium_velocity(glass, &f, &v);
    if (s == MEVAC_STATUS_OK)
        printf("v_z = %.17g cm/s  shen = %.17g\n", v.v_z, v.shen_z);

    s = mevac_transform_constants(glass, 1.5, &t);
    printf("beta = 1.5: %s\n", mevac_status_message(s));

    mevac_material_free(glass);
    return 0;
}
