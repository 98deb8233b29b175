// gmf: command-line front end over problem files.

#include "problem.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

using namespace gmf;
using gmf::cli::json;

namespace {

struct Options {
    std::string command, problem, format = "json";
    std::uint64_t seed = 1;
    int lo = -6, hi = 6, deg_lo = 0, deg_hi = 20;
    std::string source, target, module, mf;
    std::vector<std::string> mfs;
    int shift = 0, twist = 0, steps = 4, imax = 4, at = 0;
    std::optional<int> truncation;
    bool strong = false, dual = false, verify = false, no_certify = false;
};

const std::set<std::string> kCsvCommands = {"hom-table", "hilbert", "ext", "collection", "fullfaith", "exceptional"};

unsigned thread_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GMF_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1) throw InputError("GMF_THREADS must be a positive integer");
        return std::min(hw, static_cast<unsigned>(v));
    }
    return hw;
}

// Output of one command: a JSON document, an optional CSV rendering, and a
// verdict (false means exit 1).
struct Output {
    json doc = json::object();
    std::vector<std::vector<std::string>> csv;
    bool ok = true;
};

template <Coefficient K>
json matrix_json(const GradedMatrix<K>& m, const GradedRing& ring) {
    return json(matrix_strings(m, ring));
}

template <Coefficient K>
json module_json(const ModulePresentation<K>& M) {
    return {{"genDegrees", M.generators().degrees()},
            {"relations", matrix_json(M.relations(), M.ring())},
            {"overA", M.over_A()}};
}

template <Coefficient K>
json mf_json(const MatrixFactorization<K>& X) {
    return {{"P1", X.P1().degrees()},
            {"P0", X.P0().degrees()},
            {"p1", matrix_json(X.p1(), X.ring())},
            {"p0", matrix_json(X.p0(), X.ring())}};
}

template <Coefficient K>
json hom_space_json(const HomSpace<ModuleMap<K>>& h) {
    return {{"dimension", h.dimension()}, {"certification", to_string(h.certification)}, {"warnings", h.warnings}};
}

json table_json(const HomTable& t) {
    return {{"lo", t.lo}, {"hi", t.hi}, {"dims", t.dims}, {"certified", t.certified}, {"note", t.note}};
}

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

template <Coefficient K>
class Runner {
public:
    Runner(const json& doc, const Options& o) : P_(doc), o_(o) {}

    Output run() {
        const auto& c = o_.command;
        if (c == "validate") return validate();
        if (c == "cok") return cok_cmd();
        if (c == "stabilize") return stabilize_cmd();
        if (c == "hom") return hom();
        if (c == "hom-table") return hom_table();
        if (c == "stable-hom") return module_hom_cmd(false);
        if (c == "dsing-hom") return module_hom_cmd(true);
        if (c == "resolve") return resolve_cmd();
        if (c == "hilbert") return hilbert();
        if (c == "ext") return ext();
        if (c == "truncate") return truncate();
        if (c == "exceptional") return exceptional();
        if (c == "collection") return collection();
        if (c == "q-algebra") return q_algebra_cmd();
        if (c == "gorenstein") return gorenstein();
        if (c == "trichotomy") return trichotomy();
        if (c == "fullfaith") return fullfaith();
        if (c == "roundtrip") return roundtrip();
        throw InputError("unknown command '" + c + "'");
    }

private:
    Output validate() {
        Output out;
        json objects = json::array();
        std::vector<std::string> names;
        if (!o_.mf.empty()) {
            names.push_back(o_.mf);
        } else {
            names = P_.mf_names();
        }
        for (const auto& n : names) {
            auto rep = mf_validate(P_.raw_mf(n));
            objects.push_back({{"kind", "mf"}, {"name", n}, {"valid", rep.valid}, {"failures", rep.failures}});
            out.ok = out.ok && rep.valid;
        }
        if (o_.mf.empty())
            for (const auto& n : P_.module_names()) {
                P_.module(n);
                objects.push_back({{"kind", "module"}, {"name", n}, {"valid", true}, {"failures", json::array()}});
            }
        out.doc["valid"] = out.ok;
        out.doc["objects"] = objects;
        return out;
    }

    Output cok_cmd() {
        Output out;
        auto X = P_.mf(need(o_.mf, "--mf"));
        auto r = cok(X);
        out.doc["module"] = module_json(r.module);
        out.doc["certificate"] = to_string(r.certificate);
        out.doc["hilbert"] = {{"lo", o_.deg_lo}, {"hi", o_.deg_hi}, {"values", hilbert_function(r.module, o_.deg_lo, o_.deg_hi)}};
        return out;
    }

    Output stabilize_cmd() {
        Output out;
        auto st = stabilize(P_.module(need(o_.module, "--module")));
        out.doc["depth"] = st.depth;
        out.doc["rank"] = st.mf.rank();
        out.doc["mf"] = mf_json(st.mf);
        return out;
    }

    Output hom() {
        Output out;
        auto X = P_.mf(need(o_.source, "--source"));
        auto Y = P_.mf(need(o_.target, "--target"));
        auto h = mf_hom(X, Y, o_.shift, o_.twist);
        json basis = json::array();
        for (const auto& f : h.basis)
            basis.push_back({{"f1", matrix_json(f.f1, X.ring())}, {"f0", matrix_json(f.f0, X.ring())}});
        out.doc["dimension"] = h.dimension();
        out.doc["shift"] = o_.shift;
        out.doc["twist"] = o_.twist;
        out.doc["certification"] = to_string(h.certification);
        out.doc["basis"] = basis;
        return out;
    }

    Output hom_table() {
        Output out;
        auto X = P_.mf(need(o_.source, "--source"));
        auto Y = P_.mf(need(o_.target, "--target"));
        auto t = mf_hom_table(X, Y, o_.lo, o_.hi, !o_.no_certify, thread_count());
        out.doc["table"] = table_json(t);
        out.csv.push_back({"shift", "dimension"});
        for (int p = t.lo; p <= t.hi; ++p) out.csv.push_back({str(p), str(t.at(p))});
        return out;
    }

    Output module_hom_cmd(bool dsing) {
        Output out;
        auto M = P_.module(need(o_.source, "--source"));
        auto N = P_.module(need(o_.target, "--target"));
        out.doc = hom_space_json(dsing ? dsing_hom(M, N, o_.shift) : stable_hom(M, N));
        if (dsing) out.doc["shift"] = o_.shift;
        return out;
    }

    Output resolve_cmd() {
        Output out;
        auto M = P_.module(need(o_.module, "--module"));
        json maps = json::array();
        for (const auto& d : resolve(M, o_.steps))
            maps.push_back({{"source", d.source().degrees()}, {"target", d.target().degrees()}, {"matrix", matrix_json(d, M.ring())}});
        out.doc["over_A"] = M.over_A();
        out.doc["maps"] = maps;
        return out;
    }

    Output hilbert() {
        Output out;
        auto M = P_.module(need(o_.module, "--module"));
        auto h = hilbert_function(M, o_.deg_lo, o_.deg_hi);
        out.doc["lo"] = o_.deg_lo;
        out.doc["hi"] = o_.deg_hi;
        out.doc["values"] = h;
        out.csv.push_back({"degree", "dimension"});
        for (int e = o_.deg_lo; e <= o_.deg_hi; ++e) out.csv.push_back({str(e), str(h[static_cast<std::size_t>(e - o_.deg_lo)])});
        return out;
    }

    Output ext() {
        Output out;
        auto M = P_.module(need(o_.module, "--module"));
        if (o_.deg_hi < o_.deg_lo) throw InputError("empty degree window");
        auto t = ext_against_A(M, o_.imax, std::pair{o_.deg_lo, o_.deg_hi});
        std::vector<bool> van;
        for (int i = 0; i <= o_.imax; ++i) van.push_back(t.vanishes(i));
        out.doc["lo"] = t.lo;
        out.doc["hi"] = t.hi;
        out.doc["dims"] = t.dims;
        out.doc["vanishes"] = van;
        out.csv.push_back({"i", "degree", "dimension"});
        for (int i = 0; i <= o_.imax; ++i)
            for (int e = t.lo; e <= t.hi; ++e)
                out.csv.push_back({str(i), str(e), str(t.dims[static_cast<std::size_t>(i)][static_cast<std::size_t>(e - t.lo)])});
        return out;
    }

    Output truncate() {
        Output out;
        auto T = truncate_tail(P_.module(need(o_.module, "--module")), o_.at);
        out.doc["at"] = o_.at;
        out.doc["module"] = module_json(T);
        return out;
    }

    Output exceptional() {
        Output out;
        auto E = P_.mf(need(o_.mf, "--mf"));
        auto r = check_exceptional(E, o_.lo, o_.hi);
        out.doc["exceptional"] = r.exceptional;
        out.doc["certified"] = r.certified;
        out.doc["table"] = table_json(r.table);
        out.doc["reasons"] = r.reasons;
        out.ok = r.exceptional && r.certified;
        out.csv.push_back({"shift", "dimension"});
        for (int p = r.table.lo; p <= r.table.hi; ++p) out.csv.push_back({str(p), str(r.table.at(p))});
        return out;
    }

    std::vector<MatrixFactorization<K>> objects() {
        std::vector<MatrixFactorization<K>> Es;
        if (o_.dual) {
            if (!o_.mfs.empty()) throw InputError("--dual and --mfs are exclusive");
            for (const auto& E : dual_collection(P_.ring(), P_.require_potential(), o_.truncation)) Es.push_back(stabilize(E).mf);
            return Es;
        }
        if (o_.mfs.empty()) throw InputError("give --mfs or --dual");
        for (const auto& n : o_.mfs) Es.push_back(P_.mf(n));
        return Es;
    }

    Output collection() {
        Output out;
        auto Es = objects();
        auto r = check_collection(Es, o_.lo, o_.hi, o_.strong, thread_count());
        std::size_t n = Es.size();
        json tables = json::array(), hom0 = json::array();
        out.csv.push_back({"i", "j", "shift", "dimension"});
        for (std::size_t i = 0; i < n; ++i) {
            json row = json::array(), row0 = json::array();
            for (std::size_t j = 0; j < n; ++j) {
                const auto& t = r.tables[i][j];
                row.push_back(table_json(t));
                row0.push_back(t.at(0));
                for (int p = t.lo; p <= t.hi; ++p) out.csv.push_back({str(i), str(j), str(p), str(t.at(p))});
            }
            tables.push_back(row);
            hom0.push_back(row0);
        }
        out.doc["length"] = n;
        out.doc["exceptional"] = r.exceptional;
        out.doc["semiorthogonal"] = r.semiorthogonal;
        out.doc["strong_checked"] = r.strong_checked;
        out.doc["strong"] = r.strong;
        out.doc["certified"] = r.certified;
        out.doc["is_exceptional_collection"] = r.is_exceptional_collection();
        out.doc["hom_dims"] = hom0;
        out.doc["tables"] = tables;
        out.doc["reasons"] = r.reasons;
        out.ok = r.is_exceptional_collection() && r.certified && (!o_.strong || r.strong);
        return out;
    }

    Output q_algebra_cmd() {
        Output out;
        auto q = q_algebra(objects());
        json comp = json::array();
        for (const auto& a : q.compositions) {
            json ja = json::array();
            for (const auto& b : a) {
                json jb = json::array();
                for (const auto& c : b) {
                    json jc = json::array();
                    for (const auto& f : c) {
                        json jf = json::array();
                        for (const auto& v : f) {
                            json jv = json::array();
                            for (const auto& x : v) jv.push_back(x.to_string());
                            jf.push_back(jv);
                        }
                        jc.push_back(jf);
                    }
                    jb.push_back(jc);
                }
                ja.push_back(jb);
            }
            comp.push_back(ja);
        }
        out.doc["dims"] = q.dims;
        out.doc["total_dimension"] = q.total_dimension;
        out.doc["compositions"] = comp;
        return out;
    }

    Output gorenstein() {
        Output out;
        out.doc["gorenstein_parameter"] = gorenstein_parameter(P_.ring(), &P_.require_potential());
        return out;
    }

    Output trichotomy() {
        Output out;
        auto r = trichotomy_report(P_.ring(), P_.require_potential(), o_.verify, o_.lo, o_.hi);
        out.doc["gorenstein_parameter"] = r.a;
        out.doc["num_vars"] = r.num_vars;
        out.doc["degree"] = r.degree;
        out.doc["kind"] = r.kind;
        out.doc["statement"] = r.statement;
        out.doc["predicted_length"] = r.predicted_length;
        out.doc["verified"] = r.verified ? json(*r.verified) : json(nullptr);
        out.doc["verified_length"] = r.verified_length ? json(*r.verified_length) : json(nullptr);
        if (r.verified) out.ok = *r.verified;
        return out;
    }

    Output fullfaith() {
        Output out;
        auto X = P_.mf(need(o_.source, "--source"));
        auto Y = P_.mf(need(o_.target, "--target"));
        if (o_.hi < o_.lo) throw InputError("empty shift window");
        std::vector<int> shifts;
        for (int p = o_.lo; p <= o_.hi; ++p) shifts.push_back(p);
        auto r = check_full_faithfulness(X, Y, shifts);
        json rows = json::array();
        out.csv.push_back({"shift", "mf_dim", "dsing_dim", "equal"});
        for (const auto& row : r.rows) {
            rows.push_back({{"shift", row.shift}, {"mf_dim", row.mf_dim}, {"dsing_dim", row.dsing_dim}, {"equal", row.equal()}});
            out.csv.push_back({str(row.shift), str(row.mf_dim), str(row.dsing_dim), row.equal() ? "true" : "false"});
        }
        out.doc["passed"] = r.passed();
        out.doc["rows"] = rows;
        out.ok = r.passed();
        return out;
    }

    Output roundtrip() {
        Output out;
        auto r = check_round_trip(P_.mf(need(o_.mf, "--mf")), o_.seed);
        out.doc["passed"] = r.passed();
        out.doc["depth"] = r.depth;
        out.doc["minimal"] = mf_json(r.minimal);
        out.doc["recovered"] = mf_json(r.recovered);
        out.doc["attempts"] = r.iso.attempts;
        out.doc["discriminators"] = r.iso.discriminators;
        out.ok = r.passed();
        return out;
    }

    static const std::string& need(const std::string& v, const char* flag) {
        if (v.empty()) throw InputError(std::string("missing required flag ") + flag);
        return v;
    }

    cli::Problem<K> P_;
    const Options& o_;
};

json meta(const Options& o, const std::string& field) {
    return {{"tool", "gmf"},
            {"version", kVersion},
            {"command", o.command},
            {"field", field},
            {"seed", o.seed},
            {"certify", !o.no_certify}};
}

std::string csv_text(const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
        os << '\n';
    }
    return os.str();
}

int fail(const Options& o, const std::string& kind, const std::string& msg, int code) {
    json doc = {{"error", {{"kind", kind}, {"message", msg}}}, {"meta", meta(o, "")}};
    if (o.format == "json") std::cout << doc.dump(2) << '\n';
    std::cerr << "gmf: " << msg << '\n';
    return code;
}

int execute(Options& o) {
    try {
        if (o.format != "json" && o.format != "csv") throw InputError("--format must be json or csv");
        if (o.format == "csv" && !kCsvCommands.count(o.command))
            throw InputError("--format csv is only available for table commands");
        auto doc = cli::load_json(o.problem);
        Field field = cli::problem_field(doc);
        Output out = field.is_prime_field() ? Runner<Zp>(doc, o).run() : Runner<Rational>(doc, o).run();
        if (o.format == "csv") {
            std::cout << csv_text(out.csv);
        } else {
            out.doc["meta"] = meta(o, field.name());
            std::cout << out.doc.dump(2) << '\n';
        }
        return out.ok ? 0 : 1;
    } catch (const InputError& e) {
        return fail(o, "input", e.what(), 2);
    } catch (const MathError& e) {
        return fail(o, "math", e.what(), 1);
    } catch (const json::exception& e) {
        return fail(o, "input", e.what(), 2);
    } catch (const Error& e) {
        return fail(o, "math", e.what(), 1);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gmf: graded matrix factorizations and singularity categories"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    Options o;

    struct Command {
        const char* name;
        const char* help;
    };
    const std::vector<Command> commands = {
        {"validate", "check every matrix factorization and module in the problem file"},
        {"cok", "cokernel module of --mf"},
        {"stabilize", "matrix factorization of the MCM approximation of --module"},
        {"hom", "basis of Hom(--source, --target[--shift](--twist))"},
        {"hom-table", "dim Hom(--source, --target[p]) for p in [--lo, --hi]"},
        {"stable-hom", "stable Hom between MCM modules --source and --target"},
        {"dsing-hom", "Hom in the singularity category, shifted by --shift"},
        {"resolve", "minimal free resolution of --module"},
        {"hilbert", "Hilbert function of --module on [--deg-lo, --deg-hi]"},
        {"ext", "dim Ext^i_A(--module, A) for i <= --imax"},
        {"truncate", "presentation of the tail of --module from degree --at"},
        {"exceptional", "exceptionality of --mf with certified vanishing"},
        {"collection", "(strong) exceptional collection check for --mfs or --dual"},
        {"q-algebra", "endomorphism algebra of --mfs or --dual"},
        {"gorenstein", "Gorenstein parameter of A = B/W"},
        {"trichotomy", "Fano / Calabi-Yau / general type bookkeeping"},
        {"fullfaith", "compare Hom(X, Y[p]) with Hom(Cok X, Cok Y[p])"},
        {"roundtrip", "stabilize(Cok X) against the minimal part of X"},
    };
    for (const auto& c : commands) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("problem", o.problem, "problem file (JSON)")->required();
        sub->add_option("--format", o.format, "json or csv");
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--lo", o.lo, "lowest shift");
        sub->add_option("--hi", o.hi, "highest shift");
        sub->add_option("--deg-lo", o.deg_lo, "lowest degree");
        sub->add_option("--deg-hi", o.deg_hi, "highest degree");
        sub->add_option("--source", o.source, "source object");
        sub->add_option("--target", o.target, "target object");
        sub->add_option("--module", o.module, "module name");
        sub->add_option("--mf", o.mf, "matrix factorization name");
        sub->add_option("--mfs", o.mfs, "matrix factorization names, in order")->delimiter(',');
        sub->add_option("--shift", o.shift, "translation p");
        sub->add_option("--twist", o.twist, "grading twist q");
        sub->add_option("--steps", o.steps, "resolution length");
        sub->add_option("--imax", o.imax, "largest Ext index");
        sub->add_option("--at", o.at, "truncation degree");
        sub->add_option("--truncation", o.truncation, "truncation index of the dual collection");
        sub->add_flag("--strong", o.strong, "also check strongness");
        sub->add_flag("--dual", o.dual, "use the dual collection of A");
        sub->add_flag("--verify", o.verify, "verify the predicted exceptional sequence");
        sub->add_flag("--no-certify", o.no_certify, "skip vanishing certificates");
        sub->callback([&o, name = std::string(c.name)] { o.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return execute(o);
}
