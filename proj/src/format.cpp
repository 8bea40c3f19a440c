#include "ips/format.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace ips {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    [[noreturn]] void fail(const std::string& message) const {
        std::ostringstream os;
        os << "parse error at line " << line << ", column " << column << ": " << message;
        throw ParseError(line, column, os.str());
    }
};

void skip_blanks(Cursor& c) {
    while (!c.done()) {
        char ch = c.peek();
        if (ch == '#') {
            while (!c.done() && c.peek() != '\n') c.advance();
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            c.advance();
        } else {
            return;
        }
    }
}

bool try_literal(Cursor& c, std::string_view lit) {
    skip_blanks(c);
    if (c.text.substr(c.pos, lit.size()) != lit) return false;
    for (std::size_t i = 0; i < lit.size(); ++i) c.advance();
    return true;
}

void expect_literal(Cursor& c, std::string_view lit, const char* what) {
    if (!try_literal(c, lit)) c.fail(std::string("expected ") + what);
}

Integer parse_unsigned(Cursor& c) {
    skip_blanks(c);
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek()))) c.fail("expected a number");
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        digits.push_back(c.peek());
        c.advance();
    }
    return Integer(digits);
}

// "+-" or the UTF-8 "±".
bool try_pm_marker(Cursor& c) {
    return try_literal(c, "+-") || try_literal(c, "\xC2\xB1");
}

int try_sign(Cursor& c) {
    skip_blanks(c);
    if (!c.done() && c.peek() == '-') {
        c.advance();
        return -1;
    }
    // '+' is a sign only when it does not open a "+-" marker
    if (!c.done() && c.peek() == '+' && c.text.substr(c.pos, 2) != "+-") {
        c.advance();
        return 1;
    }
    return 0;
}

struct Entry {
    Integer x;
    Integer y;
    bool both_signs;
};

Entry parse_entry(Cursor& c) {
    expect_literal(c, "(", "'('");
    Entry e;
    int sign = try_sign(c);
    e.both_signs = try_pm_marker(c);
    e.x = parse_unsigned(c);
    if (sign < 0) e.x = -e.x;
    skip_blanks(c);
    if (!c.done() && (c.peek() == ';' || c.peek() == ',')) {
        c.advance();
    } else {
        c.fail("expected ';' or ',' between coordinates");
    }
    int ysign = try_sign(c);
    e.y = parse_unsigned(c);
    if (ysign < 0) e.y = -e.y;
    expect_literal(c, ")", "')'");
    return e;
}

}  // namespace

PointSet parse_set(std::string_view text, std::vector<std::string>* warnings) {
    Cursor c{text};
    expect_literal(c, "sqrt", "'sqrt'");
    expect_literal(c, "(", "'('");
    Integer p = parse_unsigned(c);
    expect_literal(c, ")", "')'");
    expect_literal(c, "/", "'/'");
    Integer q = parse_unsigned(c);
    if (p < 1) c.fail("radicand must be positive");
    if (q < 1) c.fail("denominator must be positive");
    expect_literal(c, "*", "'*'");
    expect_literal(c, "{", "'{'");

    std::vector<LatticePoint> points;
    std::map<LatticePoint, std::size_t> origin;  // point -> 1-based entry number
    std::size_t entry_number = 0;
    auto add_point = [&](LatticePoint pt) {
        auto [it, inserted] = origin.emplace(pt, entry_number);
        if (inserted) {
            points.push_back(std::move(pt));
        } else if (it->second != entry_number) {
            std::ostringstream os;
            os << "duplicate point (" << pt.x << "; " << pt.y << "): entries " << it->second
               << " and " << entry_number;
            throw DuplicatePointError(it->second, entry_number, os.str());
        }
    };

    skip_blanks(c);
    bool expect_entry = !try_literal(c, "}");
    while (expect_entry) {
        skip_blanks(c);
        if (c.done()) c.fail("unterminated point list");
        ++entry_number;
        Entry e = parse_entry(c);
        if (e.both_signs) {
            add_point({e.x, e.y});
            add_point({-e.x, e.y});
        } else {
            add_point({e.x, e.y});
        }
        if (try_literal(c, ";")) {
            if (try_literal(c, "}")) break;  // trailing separator
            continue;
        }
        expect_literal(c, "}", "';' or '}'");
        break;
    }
    skip_blanks(c);
    if (!c.done()) c.fail("unexpected content after '}'");

    bool absorbed = false;
    PointSet S = PointSet::absorbing_radicand(p, q, std::move(points), &absorbed);
    if (absorbed && warnings) {
        std::ostringstream os;
        os << "radicand " << p << " is not squarefree; normalized to " << S.lattice().p
           << " with ordinates rescaled";
        warnings->push_back(os.str());
    }
    return S;
}

std::string serialize_set(const PointSet& S) {
    std::ostringstream os;
    os << "sqrt(" << S.lattice().p << ")/" << S.lattice().q << " * {\n";
    for (const LatticePoint& pt : S.points()) os << "(" << pt.x << "; " << pt.y << ");\n";
    os << "}\n";
    return os.str();
}

}  // namespace ips
