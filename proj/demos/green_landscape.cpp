// Prints a coarse picture of the Green function on the square torus: a
// character map of g_0 over the fundamental domain, then the located maximum
// against the closed-form value log(2)/2 at the half-period (1+tau)/2.

#include <cstdio>

#include <torusgreen/torusgreen.hpp>

using namespace torusgreen;

int main()
{
    const torus t = torus_from_tau(complex(0.0, 1.0));
    const complex tau = t.modulus.tau;

    const int n = 24;
    std::printf("g_0 on the unit-square torus (pole at 0, '@' lowest, '9' highest):\n\n");
    for (int j = n - 1; j >= 0; --j) {
        std::printf("  ");
        for (int i = 0; i < n; ++i) {
            const complex z = detail::from_lattice_coordinates((i + 0.5) / n, (j + 0.5) / n, tau);
            const double g = arakelov_green(t, z, 0.0);
            // bucket the range [-1.2, 0.35] into '@', '0'..'9'
            int bucket = static_cast<int>((g + 1.2) / 1.55 * 10.0);
            if (bucket < 0)
                bucket = -1;
            if (bucket > 9)
                bucket = 9;
            std::putchar(bucket < 0 ? '@' : static_cast<char>('0' + bucket));
        }
        std::putchar('\n');
    }

    const sup_green_result s = sup_green(t);
    std::printf("\nsup g = %s at z = %s\n", format_double(s.value).c_str(),
                format_complex(s.argmax).c_str());
    std::printf("log(2)/2 = %s (the value at the half-period (1+tau)/2)\n",
                format_double(0.5 * std::log(2.0)).c_str());
    return 0;
}
