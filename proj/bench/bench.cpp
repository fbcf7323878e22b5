// Compares the serial reference paths with the OpenMP ones on the three
// parallel kernels and checks that both produce identical results.
#include <chrono>
#include <iomanip>
#include <iostream>

#include "thetalat/jordan.hpp"
#include "thetalat/pencil.hpp"

using namespace thetalat;

namespace {

double seconds(const std::function<void()>& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& name, double serial, double parallel, bool equal) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(3) << std::setw(10) << serial << " s"
              << std::setw(10) << parallel << " s   speedup "
              << std::setprecision(2) << (parallel > 0 ? serial / parallel : 0.0)
              << "   results " << (equal ? "equal" : "DIFFER") << "\n";
}

AHData gram_from_e(const IntMat& e) {
    GaussMat g(e.rows, e.cols);
    for (int i = 0; i < e.rows; ++i)
        for (int j = 0; j < e.cols; ++j)
            g(i, j) = Gaussian(Rational(0), Rational(e(i, j)));
    return make_gram_data(std::move(g), std::vector<Rational>(e.rows, Rational(0)));
}

IntMat e_block(long d) {
    IntMat e(2, 2);
    e(0, 1) = d;
    e(1, 0) = -d;
    return e;
}

IntMat block_diag(const IntMat& a, const IntMat& b) {
    IntMat m(a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            m(i, j) = a(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j)
            m(a.rows + i, a.cols + j) = b(i, j);
    return m;
}

}  // namespace

int main() {
    std::cout << "kernel                                serial   parallel\n";

    {
        FiniteGroupTable t = make_table(HeisenbergGroup({Int(2), Int(2), Int(2)}));
        JordanReport rs, rp;
        double s = seconds([&] { rs = brute_force_jordan(t, 512, Exec::serial); });
        double p = seconds([&] { rp = brute_force_jordan(t, 512, Exec::parallel); });
        bool eq = rs.constant == rp.constant &&
                  rs.witness_subgroup == rp.witness_subgroup &&
                  rs.witness_abelian_normal == rp.witness_abelian_normal;
        report("brute_force_jordan (order 128)", s, p, eq);
        std::cout << "    jordan constant = " << rs.constant.get_str() << "\n";
    }

    {
        DiscriminantGroup d;
        d.divisors = {Int(2), Int(2), Int(2), Int(2)};
        std::vector<std::vector<IntVec>> ss, sp;
        double s = seconds([&] { ss = isotropic_subgroups(d, Int(4096), Exec::serial); });
        double p = seconds([&] { sp = isotropic_subgroups(d, Int(4096), Exec::parallel); });
        report("isotropic_subgroups (order 256)", s, p, ss == sp);
        std::cout << "    isotropic subgroups found = " << ss.size() << "\n";
    }

    {
        IntMat e = block_diag(block_diag(e_block(1), e_block(2)),
                              block_diag(e_block(6), e_block(6)));
        IntMat base = block_diag(block_diag(e_block(4), e_block(2)),
                                 block_diag(e_block(0), e_block(12)));
        Pencil pencil = make_pencil(gram_from_e(base), gram_from_e(e));
        GrowthTable ts, tp;
        double s = seconds([&] { ts = growth_table(pencil, 400, Exec::serial); });
        double p = seconds([&] { tp = growth_table(pencil, 400, Exec::parallel); });
        bool eq = ts.rows.size() == tp.rows.size();
        for (size_t i = 0; eq && i < ts.rows.size(); ++i)
            eq = ts.rows[i].divisors == tp.rows[i].divisors &&
                 ts.rows[i].f_n == tp.rows[i].f_n;
        report("growth_table (8x8, 400 rows)", s, p, eq);
    }

    return 0;
}
