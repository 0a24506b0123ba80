#include "neorl/verify.hpp"

#include <cmath>
#include <sstream>

#include "neorl/csv.hpp"
#include "neorl/gvf_bank.hpp"
#include "neorl/node.hpp"
#include "neorl/nres.hpp"
#include "neorl/oracle.hpp"
#include "neorl/rng.hpp"

namespace neorl {

namespace {

// A bank with structured nonzero content for superposition checks: values
// produced by the real update rule under a random behavior stream.
GvfBank random_bank(int resolution, Rng& rng, int transitions = 600) {
    GvfBank bank(NresGrid(resolution, {{0.0, 0.0}, {1.0, 1.0}}), 0.9, 0.5);
    const CellIndex cells = static_cast<CellIndex>(bank.grid().cell_count());
    for (int i = 0; i < transitions; ++i) {
        const CellIndex from = static_cast<CellIndex>(uniform_int(rng, cells));
        const Action a = kActions[uniform_int(rng, kActionCount)];
        const CellIndex to = static_cast<CellIndex>(uniform_int(rng, cells));
        bank.update_all({from, a, to});
    }
    return bank;
}

std::string q_to_string(const QVector& q) {
    std::ostringstream os;
    os << "(" << format_double(q[0]) << ", " << format_double(q[1]) << ", " << format_double(q[2])
       << ", " << format_double(q[3]) << ")";
    return os.str();
}

}  // namespace

CheckResult check_partition(std::uint64_t seed) {
    CheckResult result{"nres partition", true, ""};
    Rng rng = make_stream(seed, "partition");
    const Rect bounds[] = {{{0.0, 0.0}, {1.0, 1.0}}, {{-0.5, 0.25}, {1.5, 2.25}}};
    for (const Rect& b : bounds) {
        for (const int n : {1, 3, 7, 23}) {
            const NresGrid grid(n, b);
            // Exactly one cell claims each sampled coordinate.
            for (int i = 0; i < 10000; ++i) {
                const Vec2 p{uniform_in(rng, b.lo.x, b.hi.x), uniform_in(rng, b.lo.y, b.hi.y)};
                const CellIndex claimed = grid.cell_of(p);
                int owners = 0;
                const double cw = b.width() / n;
                const double ch = b.height() / n;
                for (int cell = 0; cell < grid.cell_count(); ++cell) {
                    const int row = cell / n;
                    const int col = cell % n;
                    const double x0 = b.lo.x + col * cw;
                    const double y0 = b.lo.y + row * ch;
                    const bool inside = p.x >= x0 && (p.x < x0 + cw || col == n - 1) &&
                                        p.y >= y0 && (p.y < y0 + ch || row == n - 1);
                    if (inside) {
                        ++owners;
                        if (static_cast<CellIndex>(cell) != claimed) {
                            return {result.name, false,
                                    "membership disagrees with cell_of at sampled point"};
                        }
                    }
                }
                if (owners != 1) {
                    return {result.name, false, "sampled point claimed by " +
                                                    std::to_string(owners) + " cells"};
                }
            }
            // cell_of . cell_center is the identity.
            for (CellIndex c = 0; c < static_cast<CellIndex>(grid.cell_count()); ++c) {
                if (grid.cell_of(grid.cell_center(c)) != c) {
                    return {result.name, false,
                            "cell_center round trip failed at cell " + std::to_string(c)};
                }
            }
        }
    }
    const NresGrid a(7, bounds[0]);
    const NresGrid b(23, bounds[0]);
    const NresGrid c(7, bounds[1]);
    if (!compatible(a, a) || !compatible(a, b) || !compatible(b, a) || compatible(a, c)) {
        return {result.name, false, "compatibility relation violated"};
    }
    return result;
}

CheckResult check_oracle_equivalence() {
    CheckResult result{"gvf oracle equivalence", true, ""};
    for (const int n : {1, 3, 7}) {
        for (const double gamma : {0.5, 0.95}) {
            const oracle::GridWorld world{n};
            GvfBank bank(NresGrid(n, {{0.0, 0.0}, {1.0, 1.0}}), gamma, 1.0);
            oracle::train_to_convergence(bank);
            for (CellIndex goal = 0; goal < static_cast<CellIndex>(world.cells()); ++goal) {
                const auto expected = oracle::q_star(world, goal, gamma);
                const auto second = oracle::q_value_iteration(world, goal, gamma);
                for (CellIndex s = 0; s < static_cast<CellIndex>(world.cells()); ++s) {
                    for (int a = 0; a < kActionCount; ++a) {
                        const double got = bank.q(goal, s, static_cast<Action>(a));
                        if (std::abs(got - expected[s][a]) > 1e-9) {
                            return {result.name, false,
                                    "N=" + std::to_string(n) + " gamma=" + format_double(gamma) +
                                        ": trained " + format_double(got) + " vs q* " +
                                        format_double(expected[s][a])};
                        }
                        if (std::abs(second[s][a] - expected[s][a]) > 1e-12) {
                            return {result.name, false,
                                    "N=" + std::to_string(n) +
                                        ": value iteration disagrees with q*"};
                        }
                    }
                }
            }
        }
    }
    return result;
}

CheckResult check_superposition(std::uint64_t seed) {
    CheckResult result{"superposition linearity", true, ""};
    Rng rng = make_stream(seed, "superposition");
    for (int round = 0; round < 100; ++round) {
        GvfBank bank = random_bank(5, rng);
        const CellIndex agent_cell =
            static_cast<CellIndex>(uniform_int(rng, bank.grid().cell_count()));
        std::vector<Element> all;
        for (int i = 0; i < 6; ++i) {
            all.push_back({{uniform_double(rng), uniform_double(rng)}, uniform_in(rng, -2.0, 2.0)});
        }
        // Brute-force oracle: one element at a time.
        QVector elementwise{};
        for (const Element& e : all) {
            const QVector one = extract_q(bank, agent_cell, std::span(&e, 1));
            for (int a = 0; a < kActionCount; ++a) elementwise[a] += one[a];
        }
        const QVector whole = extract_q(bank, agent_cell, all);
        // Every binary partition by mask.
        for (unsigned mask = 0; mask < 64; ++mask) {
            std::vector<Element> left, right;
            for (int i = 0; i < 6; ++i) {
                (mask >> i & 1 ? left : right).push_back(all[i]);
            }
            const QVector ql = extract_q(bank, agent_cell, left);
            const QVector qr = extract_q(bank, agent_cell, right);
            for (int a = 0; a < kActionCount; ++a) {
                if (std::abs(whole[a] - (ql[a] + qr[a])) > 1e-12) {
                    return {result.name, false,
                            "partition mask " + std::to_string(mask) + ": " + q_to_string(whole) +
                                " vs split sum"};
                }
            }
        }
        for (int a = 0; a < kActionCount; ++a) {
            if (std::abs(whole[a] - elementwise[a]) > 1e-12) {
                return {result.name, false, "element-wise recomputation disagrees"};
            }
        }
        // Permutation invariance.
        std::vector<Element> shuffled = all;
        for (std::size_t i = shuffled.size(); i > 1; --i) {
            std::swap(shuffled[i - 1], shuffled[uniform_int(rng, i)]);
        }
        const QVector permuted = extract_q(bank, agent_cell, shuffled);
        for (int a = 0; a < kActionCount; ++a) {
            if (std::abs(whole[a] - permuted[a]) > 1e-12) {
                return {result.name, false, "permutation changed the extraction"};
            }
        }
    }
    return result;
}

CheckResult check_desire_arithmetic(std::uint64_t seed, const DesireFn& impl) {
    CheckResult result{"desire arithmetic", true, ""};
    const DesireFn desire = impl ? impl : DesireFn([](const QVector& q) { return desire_vector(q); });
    Rng rng = make_stream(seed, "desire");
    const Rect bounds{{0.0, 0.0}, {1.0, 1.0}};
    for (int round = 0; round < 1000; ++round) {
        QVector q;
        for (int a = 0; a < kActionCount; ++a) q[a] = uniform_in(rng, -1.0, 1.0);
        // Explicit basis sum.
        Vec2 expected{};
        for (const Action a : kActions) {
            expected = expected + q[static_cast<int>(a)] * unit_vector(a);
        }
        const Vec2 got = desire(q);
        if (got.x != expected.x || got.y != expected.y) {
            return {result.name, false,
                    "desire " + q_to_string(q) + " -> (" + format_double(got.x) + ", " +
                        format_double(got.y) + ") but basis sum gives (" +
                        format_double(expected.x) + ", " + format_double(expected.y) + ")"};
        }
        // Emitted valence is the plain input sum; zero-valence inputs are no-ops.
        std::vector<Element> elements;
        double valence_sum = 0.0;
        for (int i = 0; i < 5; ++i) {
            elements.push_back(
                {{uniform_double(rng), uniform_double(rng)}, uniform_in(rng, -2.0, 2.0)});
            valence_sum += elements.back().valence;
        }
        const Element out = emit_element({0.5, 0.5}, got, elements, bounds);
        if (out.valence != valence_sum) {
            return {result.name, false, "emitted valence differs from input sum"};
        }
        GvfBank bank = random_bank(3, rng, 100);
        const QVector base = extract_q(bank, 0, elements);
        elements.push_back({{uniform_double(rng), uniform_double(rng)}, 0.0});
        const QVector padded = extract_q(bank, 0, elements);
        for (int a = 0; a < kActionCount; ++a) {
            if (base[a] != padded[a]) {
                return {result.name, false, "zero-valence element changed the extraction"};
            }
        }
    }
    return result;
}

std::vector<CheckResult> run_verification_suites(std::uint64_t seed) {
    return {
        check_partition(seed),
        check_oracle_equivalence(),
        check_superposition(seed),
        check_desire_arithmetic(seed),
    };
}

}  // namespace neorl
