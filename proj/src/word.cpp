#include "dehnrw/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dehnrw/errors.hpp"

namespace dehnrw {

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
    return out;
}

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter a : w) {
        if (!out.empty() && out.back().gen == a.gen && out.back().exp == -a.exp)
            out.pop_back();
        else
            out.push_back(a);
    }
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string render(Letter a) {
    std::string s = "x" + std::to_string(a.gen);
    if (a.exp < 0) s += "'";
    return s;
}

std::string render(Letter a, const RoleAssignment& roles) {
    std::string s = roles.is_source(a.gen) ? "s" : "t";
    s += std::to_string(a.gen);
    if (a.exp < 0) s += "'";
    return s;
}

namespace {

template <typename RenderLetter>
std::string render_with(const Word& w, RenderLetter rl) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += rl(w[i]);
    }
    return out;
}

Word parse_impl(const std::string& text, const RoleAssignment* roles) {
    Word out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        char head = tok[0];
        if (head != 'x' && head != 's' && head != 't' && head != 'X' &&
            head != 'S' && head != 'T')
            throw ParseError("bad letter '" + tok + "': expected x/s/t prefix");
        size_t i = 1, digits = 0;
        int gen = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
            gen = gen * 10 + (tok[i] - '0');
            ++i;
            ++digits;
        }
        if (digits == 0) throw ParseError("bad letter '" + tok + "': missing index");
        int exp = 1;
        if (i < tok.size() && tok[i] == '\'') {
            exp = -1;
            ++i;
        }
        if (i != tok.size()) throw ParseError("bad letter '" + tok + "'");
        if (roles) {
            if (gen >= roles->size())
                throw ParseError("letter '" + tok + "' names an unknown generator");
            char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(head)));
            if (lower == 's' && !roles->is_source(gen))
                throw ParseError("letter '" + tok + "' is written as a source but x" +
                                 std::to_string(gen) + " is a sink");
            if (lower == 't' && !roles->is_sink(gen))
                throw ParseError("letter '" + tok + "' is written as a sink but x" +
                                 std::to_string(gen) + " is a source");
        }
        out.push_back({gen, exp});
    }
    return out;
}

} // namespace

std::string render(const Word& w) {
    return render_with(w, [](Letter a) { return render(a); });
}

std::string render(const Word& w, const RoleAssignment& roles) {
    return render_with(w, [&](Letter a) { return render(a, roles); });
}

Word parse_word(const std::string& text) { return parse_impl(text, nullptr); }

Word parse_word(const std::string& text, const RoleAssignment& roles) {
    return parse_impl(text, &roles);
}

} // namespace dehnrw
