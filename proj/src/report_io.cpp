#include "inoue/report_io.hpp"

#include <algorithm>
#include <sstream>

namespace inoue {

Json int_to_json(const BigInt& v) { return v.get_str(); }

BigInt int_from_json(const Json& j) {
    if (!j.is_string()) throw ArithError("expected an integer string");
    return BigInt(j.get<std::string>());
}

Json quad_to_json(const QuadElem& q) {
    return Json{{"d", std::to_string(q.d())},
                {"a_num", q.a().get_num().get_str()},
                {"a_den", q.a().get_den().get_str()},
                {"b_num", q.b().get_num().get_str()},
                {"b_den", q.b().get_den().get_str()}};
}

QuadElem quad_from_json(const Json& j) {
    long d = std::stol(j.at("d").get<std::string>());
    BigRat a = make_rat(int_from_json(j.at("a_num")), int_from_json(j.at("a_den")));
    BigRat b = make_rat(int_from_json(j.at("b_num")), int_from_json(j.at("b_den")));
    return QuadElem(d, a, b);
}

Json mat_to_json(const IMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

IMat mat_from_json(const Json& j) {
    std::size_t r = j.size(), c = r ? j.at(0).size() : 0;
    IMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < c; ++k) m(i, k) = int_from_json(j.at(i).at(k));
    return m;
}

namespace {

Json vec_to_json(const IVec2& v) { return Json::array({int_to_json(v[0]), int_to_json(v[1])}); }
IVec2 vec_from_json(const Json& j) { return {int_from_json(j.at(0)), int_from_json(j.at(1))}; }

Json gen_to_json(const CentralizerGen& g) {
    Json j;
    j["K"] = mat_to_json(g.K);
    j["det"] = std::to_string(g.eps);
    j["theta_eig"] = quad_to_json(g.theta_eig);
    j["x"] = int_to_json(g.x);
    j["y"] = int_to_json(g.y);
    j["power_to_N"] = g.power_to_N ? Json(std::to_string(*g.power_to_N)) : Json(nullptr);
    return j;
}

CentralizerGen gen_from_json(const Json& j) {
    CentralizerGen g;
    g.K = mat_from_json(j.at("K"));
    g.eps = std::stoi(j.at("det").get<std::string>());
    g.theta_eig = quad_from_json(j.at("theta_eig"));
    g.x = int_from_json(j.at("x"));
    g.y = int_from_json(j.at("y"));
    if (!j.at("power_to_N").is_null()) g.power_to_N = std::stol(j.at("power_to_N").get<std::string>());
    return g;
}

const char* count_key(Kind k) { return k == Kind::plus ? "deformation_classes" : "biholomorphism_classes"; }

std::string mat_str(const IMat& m) { return m.str(); }

std::string vec_str(const IVec2& v) { return "(" + v[0].get_str() + "," + v[1].get_str() + ")"; }

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        if constexpr (std::is_same_v<T, std::string>) out += xs[i];
        else out += xs[i].get_str();
    }
    return out;
}

// Fixed-width table: columns padded to their widest cell, two spaces apart.
std::string table(const std::vector<std::vector<std::string>>& rows, const std::string& indent = "") {
    std::vector<std::size_t> w;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (w.size() <= i) w.push_back(0);
            w[i] = std::max(w[i], r[i].size());
        }
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line = indent;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

}  // namespace

Json class_report_to_json(const ClassReport& rep) {
    Json j;
    j["kind"] = rep.kind == Kind::plus ? "type2" : "type3";
    j["theta"] = int_to_json(rep.theta);
    j["r"] = int_to_json(rep.r);
    j[count_key(rep.kind)] = int_to_json(rep.total_orbits());
    Json cls = Json::array();
    for (const auto& e : rep.classes) {
        Json c;
        c["N"] = mat_to_json(e.N);
        c["centralizer"] = gen_to_json(e.gen);
        Json divs = Json::array();
        for (const auto& d : e.divisors) divs.push_back(int_to_json(d));
        c["divisors"] = divs;
        c["quotient_order"] = int_to_json(e.quotient_order);
        c["action_period"] = std::to_string(e.action_period);
        Json orbs = Json::array();
        for (const auto& o : e.orbits) {
            Json oj;
            oj["size"] = std::to_string(o.representatives.size());
            Json reps = Json::array();
            for (const auto& p : o.representatives) reps.push_back(vec_to_json(p));
            oj["representatives"] = reps;
            oj["component"] = o.component ? Json(component_name(*o.component)) : Json(nullptr);
            orbs.push_back(oj);
        }
        c["orbits"] = orbs;
        cls.push_back(c);
    }
    j["similarity_classes"] = cls;
    return j;
}

ClassReport class_report_from_json(const Json& j) {
    ClassReport rep;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "type2" && kind != "type3") throw ArithError("not a type II/III report");
    rep.kind = kind == "type2" ? Kind::plus : Kind::minus;
    rep.theta = int_from_json(j.at("theta"));
    rep.r = int_from_json(j.at("r"));
    for (const auto& c : j.at("similarity_classes")) {
        ClassEntry e;
        e.N = mat_from_json(c.at("N"));
        e.gen = gen_from_json(c.at("centralizer"));
        for (const auto& d : c.at("divisors")) e.divisors.push_back(int_from_json(d));
        e.quotient_order = int_from_json(c.at("quotient_order"));
        e.action_period = std::stol(c.at("action_period").get<std::string>());
        for (const auto& oj : c.at("orbits")) {
            OrbitRecord o;
            for (const auto& p : oj.at("representatives")) o.representatives.push_back(vec_from_json(p));
            if (!oj.at("component").is_null())
                o.component = oj.at("component").get<std::string>() == "C" ? Component::C : Component::Cstar;
            e.orbits.push_back(std::move(o));
        }
        rep.classes.push_back(std::move(e));
    }
    if (rep.total_orbits() != int_from_json(j.at(count_key(rep.kind))))
        throw ArithError("class count disagrees with the orbit list");
    return rep;
}

Json type1_to_json(const TypeIReport& rep) {
    Json j;
    j["kind"] = "type1";
    j["theta2"] = int_to_json(rep.theta2);
    j["theta1"] = int_to_json(rep.theta1);
    j["admissible"] = rep.admissible;
    j["disc"] = int_to_json(rep.disc);
    j["h"] = std::to_string(rep.h);
    j["norm_bound"] = std::to_string(rep.bound);
    j["stable"] = rep.stable;
    j["biholomorphism_classes"] = std::to_string(rep.biholo_count);
    Json cls = Json::array();
    for (const auto& c : rep.classes) {
        Json cj;
        cj["ideal_hnf"] = mat_to_json(c.ideal.hnf);
        cj["ideal_norm"] = int_to_json(c.ideal.norm);
        cj["ideal_class"] = std::to_string(c.ideal_class);
        cj["beta_label"] = c.label;
        cls.push_back(cj);
    }
    j["classes"] = cls;
    return j;
}

TypeIReport type1_from_json(const Json& j) {
    if (j.at("kind") != "type1") throw ArithError("not a type I report");
    TypeIReport rep;
    rep.theta2 = int_from_json(j.at("theta2"));
    rep.theta1 = int_from_json(j.at("theta1"));
    rep.admissible = j.at("admissible").get<bool>();
    rep.disc = int_from_json(j.at("disc"));
    rep.h = std::stol(j.at("h").get<std::string>());
    rep.bound = std::stol(j.at("norm_bound").get<std::string>());
    rep.stable = j.at("stable").get<bool>();
    rep.biholo_count = std::stol(j.at("biholomorphism_classes").get<std::string>());
    for (const auto& cj : j.at("classes")) {
        TypeIClass c;
        c.ideal.hnf = mat_from_json(cj.at("ideal_hnf"));
        c.ideal.norm = int_from_json(cj.at("ideal_norm"));
        c.ideal_class = std::stol(cj.at("ideal_class").get<std::string>());
        c.label = cj.at("beta_label").get<std::string>();
        rep.classes.push_back(std::move(c));
    }
    return rep;
}

Json classes_to_json(const BigInt& trace, int det, const std::vector<SimilarityClass>& cls) {
    Json j;
    j["kind"] = "classes";
    j["trace"] = int_to_json(trace);
    j["det"] = std::to_string(det);
    j["count"] = std::to_string(cls.size());
    Json arr = Json::array();
    for (const auto& c : cls) {
        Json cj;
        cj["representative"] = mat_to_json(c.representative);
        Json cyc = Json::array();
        for (const auto& f : c.cycle) cyc.push_back(Json::array({int_to_json(f.a), int_to_json(f.b), int_to_json(f.c)}));
        cj["reduced_cycle"] = cyc;
        cj["cycle_length"] = std::to_string(c.cycle.size());
        cj["mirror_merged"] = !(c.cycle == c.mirror_cycle);
        arr.push_back(cj);
    }
    j["classes"] = arr;
    return j;
}

Json centralizer_to_json(const IMat& N, const CentralizerGen& gen) {
    Json j;
    j["kind"] = "centralizer";
    j["N"] = mat_to_json(N);
    j["generator"] = gen_to_json(gen);
    return j;
}

bool VerificationReport::ok() const {
    return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.passed; });
}

Json verification_to_json(const VerificationReport& rep) {
    Json j;
    j["kind"] = "verify";
    j["subject"] = rep.subject;
    j["ok"] = rep.ok();
    Json arr = Json::array();
    for (const auto& f : rep.findings) arr.push_back(Json{{"check", f.check}, {"passed", f.passed}, {"detail", f.detail}});
    j["findings"] = arr;
    return j;
}

VerificationReport verification_from_json(const Json& j) {
    VerificationReport rep;
    rep.subject = j.at("subject").get<std::string>();
    for (const auto& f : j.at("findings"))
        rep.findings.push_back({f.at("check").get<std::string>(), f.at("passed").get<bool>(), f.at("detail").get<std::string>()});
    return rep;
}

Json machine_document(const std::string& command, Json reports) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["reports"] = std::move(reports);
    return doc;
}

std::string emit_machine(const Json& doc) { return doc.dump(2) + "\n"; }

std::string class_report_text(const ClassReport& rep, bool list_orbits) {
    std::ostringstream os;
    const bool plus = rep.kind == Kind::plus;
    os << (plus ? "type II" : "type III") << "  theta=" << rep.theta << "  r=" << rep.r << "  det N=" << (plus ? 1 : -1)
       << "\n";
    std::vector<std::vector<std::string>> rows{
        {"class", "N", "|Z_N,r|", "divisors", "period", "orbits", "K", "det K", "K^e=N"}};
    for (std::size_t i = 0; i < rep.classes.size(); ++i) {
        const auto& e = rep.classes[i];
        rows.push_back({std::to_string(i + 1), mat_str(e.N), e.quotient_order.get_str(), join(e.divisors, ","),
                        std::to_string(e.action_period), std::to_string(e.orbits.size()), mat_str(e.gen.K),
                        std::to_string(e.gen.eps), e.gen.power_to_N ? "e=" + std::to_string(*e.gen.power_to_N) : "-"});
    }
    os << table(rows);
    if (list_orbits) {
        for (std::size_t i = 0; i < rep.classes.size(); ++i) {
            os << "class " << i + 1 << " orbits:\n";
            std::vector<std::vector<std::string>> orows{{"orbit", "size", "component", "representatives"}};
            const auto& orbs = rep.classes[i].orbits;
            for (std::size_t k = 0; k < orbs.size(); ++k) {
                std::vector<std::string> ps;
                for (const auto& p : orbs[k].representatives) ps.push_back(vec_str(p));
                orows.push_back({std::to_string(k + 1), std::to_string(orbs[k].representatives.size()),
                                 orbs[k].component ? component_name(*orbs[k].component) : "-", join(ps, " ")});
            }
            os << table(orows, "  ");
        }
    }
    os << (plus ? "deformation classes: " : "biholomorphism classes: ") << rep.total_orbits() << "\n";
    return os.str();
}

std::string type1_text(const TypeIReport& rep) {
    std::ostringstream os;
    os << "type I  theta2=" << rep.theta2 << "  theta1=" << rep.theta1 << "  disc=" << rep.disc << "\n";
    os << "ideal classes h=" << rep.h << "  norm bound=" << rep.bound << "  " << (rep.stable ? "stable" : "UNSTABLE")
       << " under doubling\n";
    std::vector<std::vector<std::string>> rows{{"class", "label", "norm", "ideal basis (HNF columns)"}};
    for (const auto& c : rep.classes)
        rows.push_back({std::to_string(c.ideal_class + 1), c.label, c.ideal.norm.get_str(), mat_str(c.ideal.hnf)});
    os << table(rows);
    os << "biholomorphism classes: " << rep.biholo_count << " (2h)\n";
    return os.str();
}

std::string classes_text(const BigInt& trace, int det, const std::vector<SimilarityClass>& cls) {
    std::ostringstream os;
    os << "similarity classes  trace=" << trace << "  det=" << det << "  count=" << cls.size() << "\n";
    std::vector<std::vector<std::string>> rows{{"class", "representative", "cycle", "reduced forms"}};
    for (std::size_t i = 0; i < cls.size(); ++i) {
        std::vector<std::string> fs;
        for (const auto& f : cls[i].cycle) fs.push_back(f.str());
        rows.push_back({std::to_string(i + 1), mat_str(cls[i].representative), std::to_string(cls[i].cycle.size()),
                        join(fs, " ")});
    }
    os << table(rows);
    return os.str();
}

std::string centralizer_text(const IMat& N, const CentralizerGen& gen) {
    std::ostringstream os;
    os << "N = " << mat_str(N) << "\n";
    std::vector<std::vector<std::string>> rows{{"K", "det K", "x", "y", "eigenvalue on expanding line", "K^e=N"}};
    rows.push_back({mat_str(gen.K), std::to_string(gen.eps), gen.x.get_str(), gen.y.get_str(), gen.theta_eig.str(),
                    gen.power_to_N ? "e=" + std::to_string(*gen.power_to_N) : "-"});
    os << table(rows);
    return os.str();
}

std::string verification_text(const VerificationReport& rep) {
    std::ostringstream os;
    os << "verify " << rep.subject << "\n";
    for (const auto& f : rep.findings)
        os << (f.passed ? "[PASS] " : "[FAIL] ") << f.check << (f.detail.empty() ? "" : "  " + f.detail) << "\n";
    os << (rep.ok() ? "all checks passed" : "some checks failed") << " (" << rep.findings.size() << ")\n";
    return os.str();
}

}  // namespace inoue
