#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "negabeta/codes.hpp"
#include "negabeta/gaps.hpp"
#include "negabeta/language.hpp"
#include "negabeta/series.hpp"
#include "plot.hpp"

namespace negabeta::tools {

using Json = nlohmann::ordered_json;

namespace {

struct JobConfig {
    std::string beta_text;
    std::string poly_text;
    std::string interval_text;
    std::size_t horizon = 512;
    std::size_t order = 32;
    std::size_t length = 12;
    std::string format = "json";
    std::string variant = "corrected";
    std::string out_path;
    // expand
    std::size_t digits = 20;
    std::string x_text;
    // plot
    std::size_t iterate = 1;
    int size = 480;
    bool horizon_capped = false;
};

// Thrown for partial results; the payload is still printed.
struct Partial {
    Json payload;
};

Json big(const BigInt& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

Json rational(const Rational& v) {
    if (v.get_den() == 1) return big(v.get_num());
    return Json(v.get_str());
}

Json big_list(const std::vector<BigInt>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(big(x));
    return a;
}

Json enclosure(const RationalInterval& iv) {
    return Json{{"lo", to_decimal(iv.lo, 15)}, {"hi", to_decimal(iv.hi, 15)}};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::string digit_string(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

Json word_list(const WordSet& s) {
    Json a = Json::array();
    for (const Word& w : s.words) a.push_back(format_word(w));
    return a;
}

Json census(const WordSet& s) {
    Json a = Json::array();
    for (std::size_t n = 0; n <= s.complete_to; ++n) a.push_back(big(s.count(n)));
    return a;
}

Json family(const WordSet& s, const BetaSpec& beta) {
    Json j{{"words", word_list(s)}, {"census", census(s)}};
    if (s.complete_to > 0) j["kraft"] = enclosure(kraft_sum(s, beta, s.complete_to));
    return j;
}

Json series_json(const SeriesResult& r, std::size_t order) {
    Json a = Json::array();
    for (std::size_t n = 0; n <= std::min(order, r.valid_to); ++n) a.push_back(rational(r.series[n]));
    return a;
}

ShiftVariant variant_of(const JobConfig& c) {
    return c.variant == "ito" ? ShiftVariant::ItoSadahiro : ShiftVariant::Corrected;
}

std::string support_name(const SupportCode& s) {
    switch (s.kind) {
    case SupportKind::CFull: return "C";
    case SupportKind::DeltaOdd: return "Delta_odd";
    case SupportKind::DeltaI: return "Delta^(" + std::to_string(s.n) + ")";
    }
    return "?";
}

bool is_horizon_error(ErrorCode c) {
    return c == ErrorCode::UnknownAtHorizon || c == ErrorCode::UndecidedAtHorizon || c == ErrorCode::HorizonTooShort ||
           c == ErrorCode::UnknownTail;
}

class Job {
public:
    Job(const JobConfig& c, BetaSpec beta) : c_(c), beta_(std::move(beta)) {}

    Json header(const std::string& command) const {
        Json j{{"schema", 1}, {"command", command}, {"beta", beta_.describe()}, {"horizon", c_.horizon}};
        if (c_.horizon_capped) j["horizon_capped"] = true;
        return j;
    }

    const BetaSpec& beta() const { return beta_; }

    const ReferencePair& ref() {
        if (!ref_) ref_ = reference_pair(beta_, c_.horizon);
        return *ref_;
    }

    Json expand_cmd() {
        FieldElement x = c_.x_text.empty() ? beta_.left() : beta_.constant(parse_rational(c_.x_text));
        Expansion e = negabeta::expand(x, c_.digits);
        Json j = header("expand");
        j["x"] = c_.x_text.empty() ? "l_beta" : c_.x_text;
        j["integer_part_length"] = e.integer_part_length;
        Word shown = e.seq.take(std::min(c_.digits, e.seq.known_length()));
        j["digits"] = digit_string(shown);
        j["sequence"] = e.seq.to_string();
        j["periodic"] = e.seq.is_periodic();
        if (!e.seq.is_periodic())
            j["note"] = e.seq.aperiodic_certified() ? "aperiodic (certified); " + std::to_string(shown.size()) + " digits shown"
                                                    : "no period found within " + std::to_string(c_.digits) + " digits";
        return j;
    }

    Json classify_cmd() {
        Json j = header("classify");
        j["d"] = ref().d.to_string();
        j["d_star"] = ref().d_star.to_string();
        Classification cl = negabeta::classify(ref());
        j["s_coded"] = cl.s_coded;
        j["s_tilde_coded"] = cl.s_tilde_coded;
        j["transitive"] = cl.transitive;
        if (cl.witness) j["witness"] = {{"left", format_word(cl.witness->left)}, {"right", format_word(cl.witness->right)},
                                        {"word", format_word(cl.witness->word())}};
        if (cl.periodic_odd) j["odd_period"] = *cl.periodic_odd;
        if (cl.i0) j["i0"] = *cl.i0;
        j["support_code"] = support_name(support_code(ref()));
        if (!at_least_golden(ref())) j["cascade_level"] = cascade_classify(ref());
        return j;
    }

    Json codes_cmd() {
        const std::size_t L = c_.length;
        Json j = header("codes");
        j["max_length"] = L;
        const SymbolicSequence& d = ref().d;
        GammaFamilies g = build_gamma(d, L);
        j["gamma"] = family(g.all(), beta_);
        j["delta_odd"] = family(build_delta_odd(d, L), beta_);
        Json deltas = Json::array();
        for (const WordSet& s : build_delta_families(d, L)) deltas.push_back(family(s, beta_));
        j["delta_i"] = deltas;
        WordSet cc = build_code_C(d, L);
        j["C"] = family(cc, beta_);
        j["C_prefix_free"] = static_cast<bool>(is_prefix_code(cc));
        j["support_code"] = support_name(support_code(ref()));
        return j;
    }

    Json complexity_cmd() {
        Json j = header("complexity");
        j["factor_complexity"] = big_list(factor_complexity(c_.order, ref().d_star));
        j["variant"] = c_.variant;
        j["census"] = big_list(Language(ref(), variant_of(c_)).census(c_.length));
        return j;
    }

    Json series_cmd(const std::string& name, const SeriesResult& r) {
        Json j = header(name);
        j["order"] = c_.order;
        j["valid_to"] = std::min(c_.order, r.valid_to);
        j["coefficients"] = series_json(r, c_.order);
        if (r.valid_to < c_.order) throw Partial{j};
        return j;
    }

    Json zeta_cmd() {
        SeriesResult t = zeta_transformation(ref(), c_.order);
        SeriesResult s = zeta_shift(ref(), c_.order);
        Json j = header("zeta");
        j["order"] = c_.order;
        j["transformation"] = series_json(t, c_.order);
        j["shift"] = series_json(s, c_.order);
        if (std::min(t.valid_to, s.valid_to) < c_.order) throw Partial{j};
        return j;
    }

    Json periodic_cmd() {
        Json j = header("periodic-points");
        std::vector<BigInt> tr, sh;
        for (std::size_t n = 1; n <= c_.length; ++n) {
            tr.push_back(count_periodic_points(n, ref(), PeriodicTarget::Transformation));
            sh.push_back(count_periodic_points(n, ref(), PeriodicTarget::Shift));
        }
        j["transformation"] = big_list(tr);
        j["shift"] = big_list(sh);
        return j;
    }

    Json gaps_cmd() {
        Json j = header("gaps");
        std::size_t n = cascade_classify(ref());
        j["cascade_level"] = n;
        const Rational w(1, BigInt("1000000000000000000"));
        j["gamma_upper"] = enclosure(gamma_n(n).enclose(w));
        j["gamma_lower"] = enclosure(gamma_n(n + 1).enclose(w));
        MorphismPair m = morphism_words(n);
        j["u"] = format_word(m.u);
        j["v"] = format_word(m.v);
        Json list = Json::array();
        for (const GapInterval& g : all_gaps(beta_, c_.horizon)) {
            list.push_back({{"k", g.k},
                            {"i", g.i},
                            {"left_index", g.left_index},
                            {"right_index", g.right_index},
                            {"left", enclosure(g.left.enclose(w))},
                            {"right", enclosure(g.right.enclose(w))}});
        }
        j["gaps"] = list;
        return j;
    }

    Json verify_cmd(bool& ok) {
        IdentityReport rep = verify_identities(beta_, c_.order, std::min<std::size_t>(8, c_.length), c_.horizon);
        Json j = header("verify");
        j["order"] = c_.order;
        Json items = Json::array();
        for (const IdentityResidual& r : rep.items) {
            Json it{{"name", r.name}, {"applicable", r.applicable}, {"order", r.order}};
            if (r.applicable) {
                it["max_abs_residual"] = big(r.max_abs());
                it["zero"] = r.zero();
            }
            if (!r.note.empty()) it["note"] = r.note;
            items.push_back(it);
        }
        j["identities"] = items;
        ok = rep.all_zero();
        j["all_zero"] = ok;
        return j;
    }

private:
    const JobConfig& c_;
    BetaSpec beta_;
    std::optional<ReferencePair> ref_;
};

BetaSpec beta_of(const JobConfig& c) {
    if (!c.poly_text.empty()) {
        if (c.interval_text.empty()) throw Error(ErrorCode::InvalidArgument, "--poly needs --interval lo,hi");
        std::vector<BigInt> coeffs;
        for (const std::string& t : split(c.poly_text, ',')) coeffs.emplace_back(t);
        auto iv = split(c.interval_text, ',');
        if (iv.size() != 2) throw Error(ErrorCode::InvalidArgument, "--interval expects lo,hi");
        return beta_from_poly(coeffs, {parse_rational(iv[0]), parse_rational(iv[1])});
    }
    if (c.beta_text.empty()) throw Error(ErrorCode::InvalidArgument, "one of --beta or --poly is required");
    return parse_beta(c.beta_text);
}

std::string csv_of(const Json& j) {
    std::ostringstream os;
    auto column = [&](const std::vector<std::string>& keys, std::size_t first = 0) {
        os << "n";
        for (const auto& k : keys) os << ',' << k;
        os << '\n';
        std::size_t rows = 0;
        for (const auto& k : keys) rows = std::max(rows, j[k].size());
        for (std::size_t r = 0; r < rows; ++r) {
            os << r + first;
            for (const auto& k : keys) {
                os << ',';
                if (r < j[k].size()) os << (j[k][r].is_string() ? j[k][r].get<std::string>() : j[k][r].dump());
            }
            os << '\n';
        }
    };
    const std::string cmd = j["command"];
    if (cmd == "laps") column({"coefficients"});
    else if (cmd == "zeta") column({"transformation", "shift"});
    else if (cmd == "complexity") column({"factor_complexity", "census"});
    else if (cmd == "periodic-points") column({"transformation", "shift"}, 1);
    else throw Error(ErrorCode::InvalidArgument, "csv output is not available for " + cmd);
    return os.str();
}

} // namespace

BetaSpec parse_beta(const std::string& text) {
    if (text == "golden") return beta_from_poly({1, -1, -1}, {Rational(1), Rational(2)});
    if (text.rfind("gamma:", 0) == 0) {
        const std::string n = text.substr(6);
        if (n.empty() || !std::all_of(n.begin(), n.end(), [](unsigned char ch) { return std::isdigit(ch); }))
            throw Error(ErrorCode::InvalidArgument, "gamma:<n> expects a nonnegative integer");
        return gamma_n(std::stoul(n));
    }
    return beta_from_rational(parse_rational(text));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    JobConfig c;
    CLI::App app{"Exact (-beta)-expansions: expansions, codes, series, gaps and plots", "negabeta"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--beta", c.beta_text, "base: p/q, decimal, golden or gamma:<n>");
    app.add_option("--poly", c.poly_text, "integer coefficients, highest degree first, comma separated");
    app.add_option("--interval", c.interval_text, "isolating interval lo,hi for --poly");
    app.add_option("--horizon", c.horizon, "digits of d(l_beta) to compute")->check(CLI::PositiveNumber);
    app.add_option("--order", c.order, "series order");
    app.add_option("--length", c.length, "enumeration length");
    app.add_option("--format", c.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    app.add_option("--variant", c.variant, "shift variant")->check(CLI::IsMember({"ito", "corrected"}));
    app.add_option("--out", c.out_path, "write output to this file");

    auto* expand = app.add_subcommand("expand", "digits of l_beta or of --x");
    expand->add_option("--digits", c.digits, "number of digits");
    expand->add_option("--x", c.x_text, "rational point of I_beta to expand");
    app.add_subcommand("classify", "coding and transitivity of the shifts");
    app.add_subcommand("codes", "word families and the code C up to --length");
    app.add_subcommand("complexity", "factor complexity and admissible-word census");
    app.add_subcommand("laps", "lap-counting series");
    app.add_subcommand("zeta", "zeta functions of the transformation and the shift");
    app.add_subcommand("periodic-points", "brute-force periodic point counts up to --length");
    app.add_subcommand("gaps", "cascade level and gap intervals below the golden ratio");
    app.add_subcommand("verify", "series identity residuals");
    auto* plot = app.add_subcommand("plot", "SVG graph of T^n");
    plot->add_option("--iterate", c.iterate, "n <= 8");
    plot->add_option("--size", c.size, "image size in pixels");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    std::string command;
    for (auto* s : app.get_subcommands()) command = s->get_name();

    auto emit = [&](const std::string& text) {
        if (c.out_path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(c.out_path, std::ios::binary);
        if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + c.out_path);
        f << text;
    };
    auto emit_json = [&](const Json& j) {
        if (c.format == "csv") emit(csv_of(j));
        else emit(j.dump(2) + "\n");
    };

    try {
        if (const char* cap = std::getenv("NEGABETA_MAX_HORIZON")) {
            std::size_t limit = std::stoul(cap);
            if (c.horizon > limit) {
                c.horizon = limit;
                c.horizon_capped = true;
            }
        }
        if (c.horizon < std::max(c.order, c.length))
            throw Error(ErrorCode::InvalidArgument, "horizon " + std::to_string(c.horizon) + " is below max(order, length) = " +
                                                        std::to_string(std::max(c.order, c.length)));
        if (c.format == "svg" && command != "plot") throw Error(ErrorCode::InvalidArgument, "svg output is only for plot");

        Job job(c, beta_of(c));
        try {
            if (command == "expand") emit_json(job.expand_cmd());
            else if (command == "classify") emit_json(job.classify_cmd());
            else if (command == "codes") emit_json(job.codes_cmd());
            else if (command == "complexity") emit_json(job.complexity_cmd());
            else if (command == "laps") emit_json(job.series_cmd("laps", lap_series(job.ref(), c.order)));
            else if (command == "zeta") emit_json(job.zeta_cmd());
            else if (command == "periodic-points") emit_json(job.periodic_cmd());
            else if (command == "gaps") emit_json(job.gaps_cmd());
            else if (command == "verify") {
                bool ok = false;
                emit_json(job.verify_cmd(ok));
                return ok ? 0 : 1;
            } else if (command == "plot") {
                LapPartition p = lap_partition(job.beta(), c.iterate);
                emit(c.format == "csv" ? render_csv(p) : render_svg(job.beta(), p, c.size));
                if (!c.out_path.empty()) {
                    Json j = job.header("plot");
                    j["iterate"] = c.iterate;
                    j["segments"] = p.laps.size();
                    j["out"] = c.out_path;
                    out << j.dump(2) << '\n';
                }
            }
        } catch (const Partial& p) {
            Json j = p.payload;
            j["status"] = "partial";
            emit_json(j);
            err << "partial result: coefficients are certified only to the reported order\n";
            return 2;
        }
    } catch (const Error& e) {
        if (is_horizon_error(e.code())) {
            Json j{{"schema", 1}, {"command", command}, {"status", "partial"}, {"error", e.what()}};
            out << j.dump(2) << '\n';
            err << e.what() << '\n';
            return 2;
        }
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace negabeta::tools
