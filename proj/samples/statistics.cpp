// Walk through the library on a few small inputs.

#include <iostream>

#include "permstat/permstat.hpp"

using namespace permstat;

int main() {
    const Permutation sigma({8, 2, 1, 3, 5, 6, 4, 9, 7});
    std::cout << "sigma        " << one_line(sigma) << '\n'
              << "DES          " << set_string(descent_set(sigma)) << '\n'
              << "DEZ          " << set_string(dez(sigma)) << '\n'
              << "exc, fix     " << exc_count(sigma) << ", " << fix_count(sigma) << '\n';

    const Word w({1, 2, 4, 5, 6, 4, 5, 6, 4, 1, 3, 6, 5, 5, 4, 6, 1, 1, 4, 5, 1, 1});
    const auto f = hook_factorize(w);
    std::cout << "hooks        |" << one_line(f.prefix) << '|';
    for (const auto& h : f.hooks) std::cout << one_line(h) << '|';
    std::cout << "  pix=" << f.prefix.size() << " lec=" << lec(f) << '\n';

    // excedance polynomial of the derangements and one-fixed-point permutations with DES = J
    const auto thm2 = verify_thm2(6, DescentSet(6, {1, 3, 4, 5}));
    std::cout << "D0 poly      " << thm2.zero << '\n'
              << "D1 poly      " << thm2.one << '\n'
              << "quotient     " << thm2.quotient << '\n';

    const auto qs = H_expand(8);
    for (int n = 3; n <= 8; ++n) std::cout << "Q_" << n << "(s)       " << qs[static_cast<std::size_t>(n)] << '\n';

    std::cout << "M(3,1)       " << M_series(Composition{3, 1}) << '\n'
              << "A_2          " << A_n_extract(2) << '\n';
    return 0;
}
