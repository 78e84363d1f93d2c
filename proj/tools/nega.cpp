// Command-line surface: construction, classification, duality, Gray images and
// minimum-weight search for negacyclic codes of length 2n over Z4 + vZ4.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "nega/gray.hpp"
#include "nega/io.hpp"
#include "nega/minweight.hpp"

using namespace nega;
using nlohmann::json;

namespace {

struct Report {
    bool ok = true;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        std::cout << (pass ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << "  " << detail;
        std::cout << "\n";
        ok = ok && pass;
    }
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string type_string(const Z4LinearCode& c) {
    return "4^" + std::to_string(c.k1()) + " 2^" + std::to_string(c.k2());
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    os << text;
}

NegacyclicCode load_code(const std::string& path, std::optional<FactorizationContext>& ctx) {
    const json j = read_json_file(path);
    if (!j.contains("n")) throw std::runtime_error("code file: missing n");
    ctx.emplace(factor_xn_minus_1(j.at("n").get<int>()));
    return code_from_json(j, *ctx);
}

// ----------------------------------------------------------- verify suites

void verify_rings(Report& rep) {
    for (int n : {1, 3, 7, 15}) {
        const auto ctx = factor_xn_minus_1(n);
        bool ok = true;
        for (const auto& K : ctx.rings) {
            ok = ok && K.mul(K.f(), K.f()) == K.mul(Z4Poly::constant(2), K.g());
            ok = ok && K.mul(K.g(), K.omega()) == Z4Poly::constant(1);
            ok = ok && !K.pi_pow(3).is_zero() && K.pi_pow(4).is_zero();
        }
        rep.check("rings.n" + std::to_string(n), ok,
                  "f^2=2g, g*omega=1, nilpotency 4 for all " + std::to_string(ctx.r()) +
                      " factors");
    }
}

void verify_length2(Report& rep, int m) {
    if (m != 1 && m != 2) throw std::runtime_error("verify length2: --m must be 1 or 2");
    const Z4Poly f = m == 1 ? Z4Poly::from_string("3 1") : Z4Poly::from_string("1 1 1");
    const ChainRing K(f);
    const KTable tab(K);
    const auto codes = enumerate_all_length2(K);
    const std::uint64_t ts = K.t_size();
    std::uint64_t expect_total = 0;
    for (int i = 0; i <= 4; ++i) {
        std::uint64_t p = 1;
        for (int k = 0; k < 4 - i; ++k) p *= ts;
        expect_total += (2 * i + 1) * p;
    }
    rep.check("length2.total", codes.size() == expect_total,
              std::to_string(codes.size()) + " codes (expected " + std::to_string(expect_total) +
                  ", pairwise distinct)");
    const auto surv = filter_condition2(K, tab, codes, K.omega());
    const std::uint64_t expect_surv = ts * ts + 5 * ts + 9;
    rep.check("length2.condition2", surv.size() == expect_surv,
              std::to_string(surv.size()) + " survive (expected " + std::to_string(expect_surv) +
                  ")");
    std::map<char, int> class_sizes;
    bool classified = true;
    for (const auto& c : surv) {
        try {
            class_sizes[classify_standard_form(K, tab, c).cls]++;
        } catch (const std::exception&) {
            classified = false;
        }
    }
    std::ostringstream sizes;
    static const char* names[] = {"", "I", "II", "III", "IV", "V"};
    for (const auto& [cls, cnt] : class_sizes) sizes << names[cls - '0'] << ":" << cnt << " ";
    rep.check("length2.classes", classified, sizes.str());
    bool sigma_ok = true;
    for (const auto& c : surv) {
        try {
            (void)sigma_to_ideal(tab, c);
        } catch (const std::exception&) {
            sigma_ok = false;
        }
    }
    rep.check("length2.sigma", sigma_ok, "all survivors map to ideals of K + vK");
}

void verify_ideals(Report& rep) {
    const ChainRing K(Z4Poly::from_string("3 1"));
    const KTable tab(K);
    const auto specs = enumerate_ideals(K);
    rep.check("ideals.count", specs.size() == 23, "2^2 + 5*2 + 9 = 23 specs at m=1");
    std::set<PairSet> sets;
    bool card_ok = true, ann_ok = true;
    const std::uint64_t ks = tab.size();
    for (const auto& s : specs) {
        const auto mat = materialize_ideal(s, tab);
        card_ok = card_ok && cpp_int(mat.size()) == ideal_cardinality(s, 1);
        sets.insert(mat);
        const auto ann_mat = materialize_ideal(annihilator(s), tab);
        // elementwise: every product is zero, and |C||Ann(C)| = 4^4
        for (const auto pe : mat) {
            const auto xa = static_cast<std::uint32_t>(pe / ks),
                       xb = static_cast<std::uint32_t>(pe % ks);
            for (const auto pg : ann_mat) {
                const auto ga = static_cast<std::uint32_t>(pg / ks),
                           gb = static_cast<std::uint32_t>(pg % ks);
                const std::uint32_t al = tab.mul(xa, ga);
                const std::uint32_t be = tab.add(tab.add(tab.mul(xa, gb), tab.mul(xb, ga)),
                                                 tab.mul(tab.two(), tab.mul(xb, gb)));
                ann_ok = ann_ok && al == 0 && be == 0;
            }
        }
        ann_ok = ann_ok && mat.size() * ann_mat.size() == 256;
    }
    rep.check("ideals.distinct", sets.size() == 23, "materializations pairwise distinct");
    rep.check("ideals.cardinality", card_ok, "table cardinalities match");
    rep.check("ideals.annihilator", ann_ok, "C*Ann(C)=0 and |C||Ann(C)|=4^4 elementwise");
    auto surv = filter_condition2(K, tab, enumerate_all_length2(K), K.omega());
    std::set<PairSet> images;
    for (const auto& c : surv) images.insert(sigma_to_ideal(tab, c));
    rep.check("ideals.sigma_match", images == sets, "sigma images equal the 23 materializations");
}

void verify_duality(Report& rep) {
    // n = 1: exhaustive dual in R^2 for all 23 codes
    const auto ctx1 = factor_xn_minus_1(1);
    const KTable tab(ctx1.rings[0]);
    using RSym = std::array<std::uint8_t, 2>;
    using RVec = std::array<RSym, 2>;
    const auto r_mul = [](RSym x, RSym y) -> RSym {
        return {static_cast<std::uint8_t>((x[0] * y[0]) & 3),
                static_cast<std::uint8_t>((x[0] * y[1] + x[1] * y[0] + 2 * x[1] * y[1]) & 3)};
    };
    const auto materialize = [&](const NegacyclicCode& code) {
        std::set<RVec> words;
        for (const auto pe : materialize_ideal(code.components[0], tab)) {
            const Z4Poly& al = tab.elem(pe / tab.size());
            const Z4Poly& be = tab.elem(pe % tab.size());
            words.insert({RSym{al.coeff(0), be.coeff(0)}, RSym{al.coeff(1), be.coeff(1)}});
        }
        return words;
    };
    bool n1_ok = true;
    for (const auto& spec : enumerate_ideals(ctx1.rings[0])) {
        const auto code = assemble(ctx1, {spec});
        const auto d = dual(ctx1, code);
        const auto cw = materialize(code);
        std::set<RVec> brute;
        for (int w = 0; w < 256; ++w) {
            const RVec cand{RSym{static_cast<std::uint8_t>(w & 3),
                                 static_cast<std::uint8_t>((w >> 2) & 3)},
                            RSym{static_cast<std::uint8_t>((w >> 4) & 3),
                                 static_cast<std::uint8_t>((w >> 6) & 3)}};
            bool orth = true;
            for (const auto& c : cw) {
                const RSym p0 = r_mul(cand[0], c[0]), p1 = r_mul(cand[1], c[1]);
                if (((p0[0] + p1[0]) & 3) || ((p0[1] + p1[1]) & 3)) {
                    orth = false;
                    break;
                }
            }
            if (orth) brute.insert(cand);
        }
        n1_ok = n1_ok && materialize(d) == brute && dual(ctx1, d) == code;
    }
    rep.check("duality.n1_brute_force", n1_ok, "all 23 duals equal the exhaustive complement");

    // n = 3 and n = 7: random codes, cardinality product and generator pairing
    std::mt19937_64 rng(20240809);
    for (int n : {3, 7}) {
        const auto ctx = factor_xn_minus_1(n);
        std::vector<std::vector<IdealSpec>> choices;
        for (int i = 0; i < ctx.r(); ++i) choices.push_back(enumerate_ideals(ctx.rings[i]));
        bool ok = true;
        const cpp_int full = cpp_int(1) << (8 * n);
        for (int it = 0; it < 200; ++it) {
            std::vector<IdealSpec> comps;
            for (int i = 0; i < ctx.r(); ++i) {
                std::uniform_int_distribution<std::size_t> pick(0, choices[i].size() - 1);
                comps.push_back(choices[i][pick(rng)]);
            }
            const auto code = assemble(ctx, comps);
            const auto d = dual(ctx, code);
            ok = ok && code_cardinality(ctx, code) * code_cardinality(ctx, d) == full;
            ok = ok && dual(ctx, d) == code;
            for (const auto& cw : code_generator_words(ctx, code))
                for (const auto& dw : code_generator_words(ctx, d))
                    ok = ok && check_pairing_orthogonal(cw, dw);
        }
        rep.check("duality.n" + std::to_string(n) + "_random", ok,
                  "200 codes: |C||C'|=16^{2n}, involution, generator pairing");
    }
}

void verify_gray(Report& rep) {
    bool sym_ok = true;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const auto [s, t] =
                gray_rho(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b));
            sym_ok = sym_ok && lee_weight_r(static_cast<std::uint8_t>(a),
                                            static_cast<std::uint8_t>(b)) ==
                                   lee_weight_z4(s) + lee_weight_z4(t);
        }
    rep.check("gray.symbol_weights", sym_ok, "w_L(e) = Lee(rho(e)) over all 16 elements");

    const auto ctx1 = factor_xn_minus_1(1);
    const KTable tab(ctx1.rings[0]);
    const auto theta_set = [&](const NegacyclicCode& code) {
        std::set<std::vector<std::uint8_t>> out;
        for (const auto pe : materialize_ideal(code.components[0], tab)) {
            RWord w;
            const Z4Poly& al = tab.elem(pe / tab.size());
            const Z4Poly& be = tab.elem(pe % tab.size());
            w.sym = {{al.coeff(0), be.coeff(0)}, {al.coeff(1), be.coeff(1)}};
            out.insert(theta(w));
        }
        return out;
    };
    bool dual_ok = true;
    for (const auto& spec : enumerate_ideals(ctx1.rings[0])) {
        const auto code = assemble(ctx1, {spec});
        const auto tc = theta_set(code);
        const auto td = theta_set(dual(ctx1, code));
        std::set<std::vector<std::uint8_t>> z4dual;
        for (int v = 0; v < 256; ++v) {
            std::vector<std::uint8_t> w(4);
            for (int k = 0; k < 4; ++k) w[k] = static_cast<std::uint8_t>((v >> (2 * k)) & 3);
            bool orth = true;
            for (const auto& c : tc) {
                int ip = 0;
                for (int k = 0; k < 4; ++k) ip += w[k] * c[k];
                if (ip % 4) {
                    orth = false;
                    break;
                }
            }
            if (orth) z4dual.insert(w);
        }
        dual_ok = dual_ok && td == z4dual;
    }
    rep.check("gray.theta_dual_n1", dual_ok, "theta(dual(C)) = theta(C)^perp for all 23 codes");

    // kernel equivalence on random small codes
    std::mt19937_64 rng(4711);
    std::uniform_int_distribution<int> dlen(6, 40), dk1(0, 4), dk2(0, 5), dc(0, 3);
    bool kern_ok = true;
    for (int it = 0; it < 25; ++it) {
        const int len = dlen(rng);
        std::vector<std::vector<std::uint8_t>> rows;
        for (int i = 0, k1 = dk1(rng); i < k1; ++i) {
            std::vector<std::uint8_t> r(len);
            for (auto& x : r) x = static_cast<std::uint8_t>(dc(rng));
            rows.push_back(std::move(r));
        }
        for (int i = 0, k2 = dk2(rng); i < k2; ++i) {
            std::vector<std::uint8_t> r(len);
            for (auto& x : r) x = static_cast<std::uint8_t>(2 * (dc(rng) & 1));
            rows.push_back(std::move(r));
        }
        const auto code = z4_standard_form(std::move(rows), len);
        if (code.k1() + code.k2() == 0) continue;
        const auto naive = min_weights_naive(code);
        const auto scalar = min_weights(code, 2, WeightKernel::Scalar);
        kern_ok = kern_ok && naive.min_lee == scalar.min_lee &&
                  naive.min_euclidean == scalar.min_euclidean;
        if (avx2_kernel_available() && len <= 64) {
            const auto avx = min_weights(code, 2, WeightKernel::Avx2);
            kern_ok = kern_ok && naive.min_lee == avx.min_lee &&
                      naive.min_euclidean == avx.min_euclidean;
        }
    }
    rep.check("gray.minweight_kernels", kern_ok,
              std::string("scalar") + (avx2_kernel_available() ? "+avx2" : "") +
                  " agree with the naive oracle");
}

// ----------------------------------------------------------- reproduce

// the twelve flagship (C2, C3) pairs at n = 7: C2 runs over F3(b) and F11(b)
// for b in {x^2, x, x^2+x, x^2+1, x+1, x^2+x+1}; C3 is the self-duality partner
std::vector<std::pair<IdealSpec, IdealSpec>> flagship_pairs(const FactorizationContext& ctx) {
    const char* bs[] = {"0 0 1", "0 1", "0 1 1", "1 0 1", "1 1", "1 1 1"};
    std::vector<std::pair<IdealSpec, IdealSpec>> out;
    for (const Family fam : {Family::F3, Family::F11})
        for (const char* b : bs) {
            const IdealSpec c2 = make_ideal_spec(fam, {}, F2Poly::from_string(b), 3);
            out.emplace_back(c2, dual_component(ctx, 1, c2));
        }
    return out;
}

int cmd_reproduce_sec6(int threads) {
    Report rep;
    const auto t0 = std::chrono::steady_clock::now();
    const auto ctx = factor_xn_minus_1(7);

    std::cout << "x^7 - 1 factorization over Z4:\n";
    for (const auto& f : ctx.factors) std::cout << "  " << f.to_string() << "\n";
    rep.check("factorization", ctx.factors[0].to_string() == "3 1" &&
                                   ctx.factors[1].to_string() == "3 1 2 1" &&
                                   ctx.factors[2].to_string() == "3 2 3 1");

    std::cout << "idempotents mod x^14 + 1:\n";
    for (const auto& e : ctx.idempotents) std::cout << "  " << e.to_string() << "\n";
    rep.check("idempotents",
              ctx.idempotents[0].to_string() == "3 0 1 0 3 0 1 0 3 0 1 0 3" &&
                  ctx.idempotents[1].to_string() == "1 0 1 0 3 0 2 0 3 0 2 0 2" &&
                  ctx.idempotents[2].to_string() == "1 0 2 0 2 0 1 0 2 0 1 0 3");

    rep.check("count", count_codes(ctx) == 293687, "23 * 113^2 = 293687 negacyclic codes");
    rep.check("count_selfdual", count_selfdual(ctx) == 339, "3 * 113 = 339 self-dual codes");
    {
        const cpp_int p5 = count_selfdual_mersenne(5);
        const cpp_int p7 = count_selfdual_mersenne(7);
        cpp_int p7e = boost::multiprecision::pow(cpp_int(17033), 9);
        p7e *= 3;
        std::cout << "self-dual counts: p=3: " << count_selfdual_mersenne(3) << ", p=5: " << p5
                  << ", p=7: " << p7 << "\n";
        rep.check("formula_p5", p5 == 5093808171LL, "3 * 1193^3");
        rep.check("formula_p7", p7 == p7e, "3 * 17033^9");
    }

    CodeStream stream(ctx, CodeStream::Mode::SelfDual);
    int count = 0;
    bool all_selfdual = true;
    std::set<std::string> c1_seen;
    while (auto c = stream.next()) {
        all_selfdual = all_selfdual && dual(ctx, *c) == *c;
        c1_seen.insert(spec_to_string(c->components[0]));
        ++count;
    }
    rep.check("selfdual_stream", count == 339 && all_selfdual,
              "339 codes, each equal to its dual");
    rep.check("selfdual_c1_range",
              c1_seen == std::set<std::string>{"F7", "F15 b=[0]", "F15 b=[1]"},
              "C1 in {<2>, <v(x-1),2(x-1)>, <2+v(x-1),2(x-1)>}");

    const auto pairs = flagship_pairs(ctx);
    const std::vector<std::pair<IdealSpec, std::array<int, 4>>> c1_expect = {
        {make_ideal_spec(Family::F15, {}, F2Poly(), 1), {8, 12, 7, 14}},
        {make_ideal_spec(Family::F15, {}, F2Poly::one(), 1), {8, 12, 7, 14}},
        {make_ideal_spec(Family::F7, {}, {}, 1), {6, 12, 6, 16}},
    };
    std::cout << "36 flagship self-dual codes (d_L, d_E, type of the Gray image):\n";
    int good = 0;
    for (const auto& [c1, expect] : c1_expect) {
        for (const auto& [c2, c3] : pairs) {
            const auto code = assemble(ctx, {c1, c2, c3});
            const auto gray = gray_image(to_z4_code(ctx, code));
            const auto w = min_weights(gray, threads);
            const bool pass = w.min_lee == expect[0] && w.min_euclidean == expect[1] &&
                              gray.k1() == expect[2] && gray.k2() == expect[3];
            good += pass;
            std::cout << "  C1=" << spec_to_string(c1) << "  C2=" << spec_to_string(c2)
                      << "  ->  d_L=" << w.min_lee << " d_E=" << w.min_euclidean
                      << " type=" << type_string(gray) << (pass ? "" : "   << MISMATCH") << "\n";
        }
    }
    rep.check("flagship_36", good == 36,
              "24 codes at (d_L=8, d_E=12, 4^7 2^14) and 12 at (d_L=6, d_E=12, 4^6 2^16)");
    std::cerr << "elapsed: " << seconds_since(t0) << " s\n";
    return rep.ok ? 0 : 1;
}

int cmd_reproduce_thm61() {
    Report rep;
    for (int p : {3, 5, 7}) {
        const cpp_int codes = count_codes_mersenne(p);
        const cpp_int sd = count_selfdual_mersenne(p);
        std::cout << "p=" << p << " n=" << ((1 << p) - 1) << ": codes=" << codes
                  << " self-dual=" << sd << "\n";
        const auto ctx = factor_xn_minus_1((1 << p) - 1);
        rep.check("structure_p" + std::to_string(p),
                  ctx.lambda == 1 && ctx.pairs == ((1 << (p - 1)) - 1) / p,
                  "lambda=1, epsilon=(2^{p-1}-1)/p");
        rep.check("count_p" + std::to_string(p),
                  count_codes(ctx) == codes && count_selfdual(ctx) == sd,
                  "context counts match the closed form");
    }
    const std::vector<std::pair<int, const char*>> fixtures = {
        {3, "339"}, {5, "5093808171"}, {7, "362027509353485792074624344632349824859"}};
    for (const auto& [p, expect] : fixtures) {
        std::ostringstream os;
        os << count_selfdual_mersenne(p);
        rep.check("fixture_p" + std::to_string(p), os.str() == expect, expect);
    }
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"negacyclic codes of length 2n over Z4 + vZ4 (v^2 = 2v)"};
    app.require_subcommand(1);
    int threads = 0;

    auto* sc_factor = app.add_subcommand("factor", "factor x^n - 1 into basic irreducibles");
    int n_factor = 7;
    sc_factor->add_option("--n", n_factor, "odd length parameter n")->required();

    auto* sc_idem = app.add_subcommand("idempotents", "print the idempotents mod x^{2n}+1");
    int n_idem = 7;
    sc_idem->add_option("--n", n_idem, "odd length parameter n")->required();

    auto* sc_count = app.add_subcommand("count", "count negacyclic codes of length 2n");
    int n_count = 7;
    bool count_sd = false;
    sc_count->add_option("--n", n_count, "odd length parameter n")->required();
    sc_count->add_flag("--self-dual", count_sd, "count only self-dual codes");

    auto* sc_enum = app.add_subcommand("enumerate", "stream codes as JSON lines");
    int n_enum = 7;
    bool enum_sd = false;
    std::uint64_t enum_limit = 0;
    std::string enum_out;
    sc_enum->add_option("--n", n_enum, "odd length parameter n")->required();
    sc_enum->add_flag("--self-dual", enum_sd, "only self-dual codes");
    sc_enum->add_option("--limit", enum_limit, "stop after this many codes (0 = all)");
    sc_enum->add_option("--out", enum_out, "output file (default stdout)");

    auto* sc_dual = app.add_subcommand("dual", "dual code of a code file");
    std::string dual_file, dual_out;
    sc_dual->add_option("--code", dual_file, "input code JSON file")->required();
    sc_dual->add_option("--out", dual_out, "output file (default stdout)");

    auto* sc_gray = app.add_subcommand("gray", "Gray image generator matrix of a code file");
    std::string gray_file, gray_out;
    bool gray_binary = false;
    sc_gray->add_option("--code", gray_file, "input code JSON file")->required();
    sc_gray->add_option("--out", gray_out, "output file (default stdout)");
    sc_gray->add_flag("--binary", gray_binary, "include binary Gray images of the generators");

    auto* sc_mw = app.add_subcommand("minweight", "exact minimum Lee/Euclidean weights");
    std::string mw_file, mw_kernel = "auto";
    sc_mw->add_option("--code", mw_file, "input code JSON file")->required();
    sc_mw->add_option("--threads", threads, "worker threads (0 = hardware)");
    sc_mw->add_option("--kernel", mw_kernel, "auto|scalar|avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

    auto* sc_verify = app.add_subcommand("verify", "run a module verification suite");
    std::string suite;
    int verify_m = 1;
    sc_verify->add_option("--suite", suite, "rings|length2|ideals|duality|gray|all")
        ->required()
        ->check(CLI::IsMember({"rings", "length2", "ideals", "duality", "gray", "all"}));
    sc_verify->add_option("--m", verify_m, "residue degree for the length2 oracle (1 or 2)");

    auto* sc_rep = app.add_subcommand("reproduce", "recompute the reference tables and counts");
    std::string section;
    sc_rep->add_option("--section", section, "sec6|thm61")
        ->required()
        ->check(CLI::IsMember({"sec6", "thm61"}));
    sc_rep->add_option("--threads", threads, "worker threads for the weight search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*sc_factor) {
            const auto ctx = factor_xn_minus_1(n_factor);
            for (const auto& f : ctx.factors) std::cout << f.to_string() << "\n";
            return 0;
        }
        if (*sc_idem) {
            const auto ctx = factor_xn_minus_1(n_idem);
            for (const auto& e : ctx.idempotents) std::cout << e.to_string() << "\n";
            return 0;
        }
        if (*sc_count) {
            const auto ctx = factor_xn_minus_1(n_count);
            std::cout << (count_sd ? count_selfdual(ctx) : count_codes(ctx)) << "\n";
            return 0;
        }
        if (*sc_enum) {
            const auto ctx = factor_xn_minus_1(n_enum);
            CodeStream s(ctx, enum_sd ? CodeStream::Mode::SelfDual : CodeStream::Mode::All);
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!enum_out.empty()) {
                file.open(enum_out);
                if (!file) throw std::runtime_error("cannot write " + enum_out);
                os = &file;
            }
            std::uint64_t emitted = 0;
            while (auto c = s.next()) {
                *os << code_to_json(*c).dump() << "\n";
                if (++emitted == enum_limit) break;
            }
            return 0;
        }
        if (*sc_dual) {
            std::optional<FactorizationContext> ctx;
            const auto code = load_code(dual_file, ctx);
            write_output(dual_out, code_to_json(dual(*ctx, code)).dump() + "\n");
            return 0;
        }
        if (*sc_gray) {
            std::optional<FactorizationContext> ctx;
            const auto code = load_code(gray_file, ctx);
            const auto gray = gray_image(to_z4_code(*ctx, code));
            json j = z4_code_to_json(gray, gray_binary);
            j["n"] = ctx->n;
            write_output(gray_out, j.dump(2) + "\n");
            if (!gray_out.empty())
                std::cout << "length=" << gray.length << " type=" << type_string(gray) << "\n";
            return 0;
        }
        if (*sc_mw) {
            std::optional<FactorizationContext> ctx;
            const auto code = load_code(mw_file, ctx);
            const auto gray = gray_image(to_z4_code(*ctx, code));
            const WeightKernel k = mw_kernel == "scalar" ? WeightKernel::Scalar
                                   : mw_kernel == "avx2" ? WeightKernel::Avx2
                                                         : WeightKernel::Auto;
            const auto w = min_weights(gray, threads, k);
            std::cout << "d_L=" << w.min_lee << " d_E=" << w.min_euclidean
                      << " type=" << type_string(gray) << "\n";
            return 0;
        }
        if (*sc_verify) {
            Report rep;
            if (suite == "rings" || suite == "all") verify_rings(rep);
            if (suite == "length2" || suite == "all") verify_length2(rep, verify_m);
            if (suite == "ideals" || suite == "all") verify_ideals(rep);
            if (suite == "duality" || suite == "all") verify_duality(rep);
            if (suite == "gray" || suite == "all") verify_gray(rep);
            return rep.ok ? 0 : 1;
        }
        if (*sc_rep) {
            if (section == "sec6") return cmd_reproduce_sec6(threads);
            return cmd_reproduce_thm61();
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
