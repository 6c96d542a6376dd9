#include "plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace negabeta::tools {

namespace {

struct Piece {
    Word word;
    FieldElement a, b;
    // T^j(x) = s x + t on the open piece
    FieldElement s, t;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

LapPartition lap_partition(const BetaSpec& beta, std::size_t n) {
    if (n > 8) throw Error(ErrorCode::InvalidArgument, "plot iterate must be at most 8");
    const FieldElement b = beta.value();
    const FieldElement l = beta.left();
    const FieldElement r = beta.right();

    // discontinuities c_k = -(k + l)/beta, 1 <= k < beta, decreasing in k
    std::vector<FieldElement> cuts;
    for (long k = 1; fe_compare(beta.constant(k), b) < 0; ++k) cuts.push_back(-(l + Rational(k)) / b);

    std::vector<Piece> pieces{{{}, l, r, beta.constant(1), beta.constant(0)}};
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Piece> next;
        for (const Piece& p : pieces) {
            FieldElement ya = p.s * p.a + p.t, yb = p.s * p.b + p.t;
            if (fe_compare(ya, yb) > 0) std::swap(ya, yb);
            std::vector<FieldElement> xs{p.a};
            for (const FieldElement& c : cuts)
                if (fe_compare(ya, c) < 0 && fe_compare(c, yb) < 0) xs.push_back((c - p.t) / p.s);
            std::sort(xs.begin() + 1, xs.end(), [](const FieldElement& u, const FieldElement& v) { return fe_compare(u, v) < 0; });
            xs.push_back(p.b);
            for (std::size_t q = 0; q + 1 < xs.size(); ++q) {
                FieldElement mid = p.s * ((xs[q] + xs[q + 1]) * Rational(1, 2)) + p.t;
                BigInt digit = fe_floor(-(b * mid) - l);
                Piece np{p.word, xs[q], xs[q + 1], -(b * p.s), -(b * p.t) - Rational(digit)};
                np.word.push_back(static_cast<int>(digit.get_si()));
                next.push_back(std::move(np));
            }
        }
        pieces = std::move(next);
    }

    LapPartition out;
    out.n = n;
    out.degenerate_left = beta.is_rational() && beta.rational_value().get_den() == 1 && n > 0;
    for (Piece& p : pieces) {
        FieldElement y0 = p.s * p.a + p.t, y1 = p.s * p.b + p.t;
        out.laps.push_back({std::move(p.word), p.a, p.b, std::move(y0), std::move(y1)});
    }
    return out;
}

std::string render_svg(const BetaSpec& beta, const LapPartition& p, int size) {
    const double l = beta.left().approx(), r = beta.right().approx();
    auto px = [&](double x) { return fmt((x - l) / (r - l) * size); };
    auto py = [&](double y) { return fmt(size - (y - l) / (r - l) * size); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
       << size << ' ' << size << "\">\n";
    os << "<title>T^" << p.n << " for beta = " << beta.describe() << ", " << p.laps.size() << " laps</title>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size << "\" fill=\"white\" stroke=\"black\"/>\n";
    os << "<line class=\"diagonal\" x1=\"0\" y1=\"" << size << "\" x2=\"" << size
       << "\" y2=\"0\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\"/>\n";
    for (const LapSegment& s : p.laps) {
        os << "<line class=\"lap\" data-word=\"" << format_word(s.word) << "\" x1=\"" << px(s.x0.approx()) << "\" y1=\""
           << py(s.y0.approx()) << "\" x2=\"" << px(s.x1.approx()) << "\" y2=\"" << py(s.y1.approx())
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    if (p.degenerate_left)
        os << "<circle class=\"degenerate\" cx=\"" << px(l) << "\" cy=\"" << py(l) << "\" r=\"2\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string render_csv(const LapPartition& p) {
    std::ostringstream os;
    os << "x0,y0,x1,y1,word\n";
    for (const LapSegment& s : p.laps) {
        os << s.x0.approx() << ',' << s.y0.approx() << ',' << s.x1.approx() << ',' << s.y1.approx() << ','
           << format_word(s.word) << '\n';
    }
    return os.str();
}

} // namespace negabeta::tools
