// inoue-classify: classification tables for Inoue surfaces of types I, II and III.

#include "inoue/affine.hpp"
#include "inoue/report_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <thread>

using namespace inoue;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInadmissible = 3;
constexpr int kExitInternal = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long parse_long(const std::string& s) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: " + s);
    }
    if (pos != s.size()) throw UsageError("not an integer: " + s);
    return v;
}

// "1-10", "3", and comma lists of either.
std::vector<long> parse_r_list(const std::vector<std::string>& items) {
    std::vector<long> out;
    for (const auto& it : items) {
        auto dash = it.find('-', 1);
        if (dash == std::string::npos) {
            out.push_back(parse_long(it));
        } else {
            long lo = parse_long(it.substr(0, dash)), hi = parse_long(it.substr(dash + 1));
            if (hi < lo || hi - lo > 100000) throw UsageError("bad range: " + it);
            for (long r = lo; r <= hi; ++r) out.push_back(r);
        }
    }
    if (out.empty()) throw UsageError("--r needs at least one value");
    for (long r : out)
        if (r < 1) throw UsageError("r must be >= 1");
    return out;
}

IMat parse_matrix(const std::vector<std::string>& entries) {
    if (entries.size() != 4) throw UsageError("--matrix takes four entries n11,n12,n21,n22");
    return IMat{{parse_long(entries[0]), parse_long(entries[1])}, {parse_long(entries[2]), parse_long(entries[3])}};
}

std::optional<long> env_norm_bound() {
    const char* v = std::getenv("INOUE_IDEAL_NORM_BOUND");
    if (!v || !*v) return std::nullopt;
    long b = parse_long(v);
    if (b < 1) throw UsageError("INOUE_IDEAL_NORM_BOUND must be >= 1");
    return b;
}

template <class T, class F>
std::vector<T> run_ordered(const std::vector<long>& rs, unsigned jobs, F f) {
    std::vector<T> out(rs.size());
    std::vector<std::exception_ptr> errs(rs.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rs.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < rs.size(); i += jobs) {
                try {
                    out[i] = f(rs[i]);
                } catch (...) {
                    errs[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    return out;
}

struct Options {
    std::string format = "text";
    long theta = 0;
    std::vector<std::string> r{"1"};
    long theta2 = 0, theta1 = 0;
    long det = 1;
    std::vector<std::string> matrix;
    std::optional<long> bound;
    bool list_orbits = false;
    unsigned jobs = 1;
};

void emit(const Options& o, const std::string& command, const Json& reports, const std::string& text) {
    if (o.format == "machine") std::cout << emit_machine(machine_document(command, reports));
    else std::cout << text;
}

int cmd_type23(const Options& o, Kind kind) {
    auto rs = parse_r_list(o.r);
    auto reps = run_ordered<ClassReport>(rs, o.jobs, [&](long r) { return classify(o.theta, r, kind); });
    Json arr = Json::array();
    std::string text;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        arr.push_back(class_report_to_json(reps[i]));
        if (i) text += "\n";
        text += class_report_text(reps[i], o.list_orbits);
    }
    emit(o, kind == Kind::plus ? "type2" : "type3", arr, text);
    return kExitOk;
}

int cmd_type1(const Options& o) {
    auto bound = o.bound ? o.bound : env_norm_bound();
    TypeIReport rep = classify_type1(o.theta2, o.theta1, bound);
    emit(o, "type1", Json::array({type1_to_json(rep)}), type1_text(rep));
    return kExitOk;
}

int cmd_classes(const Options& o) {
    if (o.det != 1 && o.det != -1) throw UsageError("--det must be 1 or -1");
    auto cls = similarity_classes(o.theta, static_cast<int>(o.det));
    emit(o, "classes", Json::array({classes_to_json(o.theta, static_cast<int>(o.det), cls)}),
         classes_text(o.theta, static_cast<int>(o.det), cls));
    return kExitOk;
}

int cmd_centralizer(const Options& o) {
    std::vector<IMat> Ns;
    if (!o.matrix.empty()) {
        Ns.push_back(parse_matrix(o.matrix));
    } else {
        if (o.det != 1 && o.det != -1) throw UsageError("--det must be 1 or -1");
        for (const auto& c : similarity_classes(o.theta, static_cast<int>(o.det))) Ns.push_back(c.representative);
    }
    Json arr = Json::array();
    std::string text;
    for (const auto& N : Ns) {
        CentralizerGen g = positive_centralizer_generator(N);
        arr.push_back(centralizer_to_json(N, g));
        text += centralizer_text(N, g);
    }
    emit(o, "centralizer", arr, text);
    return kExitOk;
}

VerificationReport verify_type23(long theta, long r, Kind kind) {
    VerificationReport rep;
    rep.subject = std::string(kind == Kind::plus ? "type2" : "type3") + " theta=" + std::to_string(theta) +
                  " r=" + std::to_string(r);
    auto add = [&](const std::string& check, bool ok, const std::string& detail = "") {
        rep.findings.push_back({check, ok, detail});
    };
    for (const auto& cls : similarity_classes(theta, kind == Kind::plus ? 1 : -1)) {
        const IMat& N = cls.representative;
        CompatContext ctx = make_context(N, r, kind);
        FiniteQuotient Q = quotient_group(shifted_matrix(N, kind), r);
        for (const auto& p : Q.representatives()) {
            std::string tag = "N=" + N.str() + " p=(" + p[0].get_str() + "," + p[1].get_str() + ")";
            ExactGenerators gs = build_generators(ctx, p);
            RelationReport rel = verify_relations(gs);
            std::string detail;
            for (const auto& f : rel.findings) detail += (detail.empty() ? "" : "; ") + f;
            add("relations " + tag, rel.ok, detail);
            NormalForm nf = normal_form(Word{{2, 1}, {1, 1}}, gs);
            add("normal form g2 g1 " + tag, nf == NormalForm{0, 1, 1, -BigInt(r)});
            for (const IVec2& k : {IVec2{1, 0}, IVec2{0, 1}, IVec2{2, -1}}) {
                TauReport tr = verify_tau_conjugation(ctx, gs.c, gs.t, k, 1, IVec2{1, -1});
                add("conjugation lemma k=(" + k[0].get_str() + "," + k[1].get_str() + ") " + tag,
                    tr.forward && tr.backward, tr.mismatch);
            }
            for (const IMat& K : {IMat{{0, 1}, {1, 0}}, IMat{{2, 1}, {1, 1}}, IMat{{1, -3}, {0, -1}}})
                add("(A,B,C) bridge K=" + K.str() + " " + tag, verify_abc_bridge(ctx, gs.c, K));
        }
    }
    return rep;
}

VerificationReport verify_type1(long theta2, long theta1, std::optional<long> bound) {
    VerificationReport rep;
    rep.subject = "type1 theta2=" + std::to_string(theta2) + " theta1=" + std::to_string(theta1);
    CubicInput P{theta2, theta1};
    IdealClassResult ic = ideal_classes(theta2, theta1, bound);
    for (const auto& I : ic.representatives) {
        BallGenerators gs = build_type1_generators(P, I.hnf);
        RelationReport rel = verify_relations(gs);
        std::string detail = "M=" + rel.exponents.str();
        for (const auto& f : rel.findings) detail += "; " + f;
        rep.findings.push_back({"relations ideal=" + I.hnf.str(), rel.ok, detail});
        Word w{{0, 1}, {1, 2}, {0, -1}, {3, 1}, {2, -1}};
        NormalFormI nf = normal_form(w, gs);
        rep.findings.push_back({"normal form ideal=" + I.hnf.str(), equal(expand(nf, gs), evaluate(w, gs)),
                                "(" + nf.k3.get_str() + "," + nf.k2.get_str() + "," + nf.k1.get_str() + "," +
                                    std::to_string(nf.k0) + ")"});
    }
    return rep;
}

int cmd_verify(const Options& o, bool type1, Kind kind) {
    std::vector<VerificationReport> reps;
    if (type1) {
        reps.push_back(verify_type1(o.theta2, o.theta1, o.bound ? o.bound : env_norm_bound()));
    } else {
        auto rs = parse_r_list(o.r);
        reps = run_ordered<VerificationReport>(rs, o.jobs, [&](long r) { return verify_type23(o.theta, r, kind); });
    }
    Json arr = Json::array();
    std::string text;
    bool ok = true;
    for (const auto& r : reps) {
        arr.push_back(verification_to_json(r));
        text += verification_text(r);
        ok = ok && r.ok();
    }
    emit(o, "verify", arr, text);
    return ok ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classification of Inoue surfaces: similarity classes, centralisers, moduli orbits, ideal classes"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "machine"}));
    };
    auto add_r = [&](CLI::App* s) {
        s->add_option("--r", o.r, "r values: list and/or ranges, e.g. 1-10 or 2,3,7")->delimiter(',');
        s->add_option("--jobs", o.jobs, "Worker threads for multiple r (output order is fixed)")
            ->check(CLI::Range(1u, 256u));
    };

    auto* t2 = app.add_subcommand("type2", "Type II: deformation classes over (theta, r)");
    t2->add_option("--theta", o.theta, "Trace theta >= 3")->required();
    add_r(t2);
    t2->add_flag("--list-orbits", o.list_orbits, "List each orbit with its component type");
    add_format(t2);

    auto* t3 = app.add_subcommand("type3", "Type III: biholomorphism classes over (theta, r)");
    t3->add_option("--theta", o.theta, "Trace theta >= 1")->required();
    add_r(t3);
    t3->add_flag("--list-orbits", o.list_orbits, "List each orbit");
    add_format(t3);

    auto* t1 = app.add_subcommand("type1", "Type I: ideal classes of Z[alpha] for X^3 - theta2 X^2 + theta1 X - 1");
    t1->add_option("--theta2", o.theta2)->required();
    t1->add_option("--theta1", o.theta1)->required();
    t1->add_option("--bound", o.bound, "Ideal norm bound (default: INOUE_IDEAL_NORM_BOUND or 0.2829 sqrt|disc|)");
    add_format(t1);

    auto* cl = app.add_subcommand("classes", "GL(2,Z) similarity classes with given trace and determinant");
    cl->add_option("--theta", o.theta, "Trace")->required();
    cl->add_option("--det", o.det, "Determinant, 1 or -1");
    add_format(cl);

    auto* ce = app.add_subcommand("centralizer", "Generator of the positive centraliser");
    ce->add_option("--matrix", o.matrix, "n11,n12,n21,n22")->delimiter(',');
    ce->add_option("--theta", o.theta, "Trace (all class representatives)");
    ce->add_option("--det", o.det, "Determinant, 1 or -1");
    add_format(ce);

    auto* ve = app.add_subcommand("verify", "Check group relations, normal forms and conjugation identities");
    std::string vtype = "type2";
    ve->add_option("--type", vtype, "type1, type2 or type3")->check(CLI::IsMember({"type1", "type2", "type3"}));
    ve->add_option("--theta", o.theta);
    add_r(ve);
    ve->add_option("--theta2", o.theta2);
    ve->add_option("--theta1", o.theta1);
    ve->add_option("--bound", o.bound);
    add_format(ve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (t2->parsed()) return cmd_type23(o, Kind::plus);
        if (t3->parsed()) return cmd_type23(o, Kind::minus);
        if (t1->parsed()) return cmd_type1(o);
        if (cl->parsed()) return cmd_classes(o);
        if (ce->parsed()) {
            if (o.matrix.empty() && ce->count("--theta") == 0) throw UsageError("centralizer needs --matrix or --theta");
            return cmd_centralizer(o);
        }
        if (ve->parsed()) {
            if (vtype == "type1") {
                if (ve->count("--theta2") == 0 || ve->count("--theta1") == 0)
                    throw UsageError("verify --type type1 needs --theta2 and --theta1");
                return cmd_verify(o, true, Kind::plus);
            }
            if (ve->count("--theta") == 0) throw UsageError("verify needs --theta");
            return cmd_verify(o, false, vtype == "type2" ? Kind::plus : Kind::minus);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    } catch (const ArithError& e) {
        std::cerr << "inadmissible parameters: " << e.what() << "\n";
        return kExitInadmissible;
    }
    return kExitUsage;
}
