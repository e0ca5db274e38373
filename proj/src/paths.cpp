#include "tforge/paths.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace tforge {

bool is_motzkin(const Path& p) {
    int height = 0;
    for (Step s : p) {
        height += s;
        if (height < 0) return false;
    }
    return height == 0;
}

int count_zeros(const Path& p) {
    return static_cast<int>(std::count(p.begin(), p.end(), Step{0}));
}

namespace {

void extend(Path& prefix, int height, int remaining, std::vector<Path>& out, bool allow_flat) {
    if (remaining == 0) {
        if (height == 0) out.push_back(prefix);
        return;
    }
    // steps tried in ascending order keeps the output lexicographic
    for (Step s : {Step{-1}, Step{0}, Step{1}}) {
        if (s == 0 && !allow_flat) continue;
        const int h = height + s;
        if (h < 0 || h > remaining - 1) continue;
        prefix.push_back(s);
        extend(prefix, h, remaining - 1, out, allow_flat);
        prefix.pop_back();
    }
}

std::vector<Path> enumerate(int n, int cap, bool allow_flat) {
    if (n < 0) throw std::domain_error("negative path length");
    if (n > cap) throw std::domain_error("enumeration too large");
    std::vector<Path> out;
    Path prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    extend(prefix, 0, n, out, allow_flat);
    return out;
}

}  // namespace

std::vector<Path> enumerate_motzkin(int n, int cap) { return enumerate(n, cap, true); }

std::vector<Path> enumerate_dyck(int n, int cap) {
    if (n % 2 != 0) throw std::domain_error("no Dyck paths of odd length");
    return enumerate(n, cap, false);
}

SuffixClass suffix_class(const Path& p) {
    if (p.empty() || !is_motzkin(p))
        throw std::domain_error("suffix class requires a nonempty Motzkin path");
    int run = 0;
    auto it = p.rbegin();
    while (it != p.rend() && *it == -1) {
        ++run;
        ++it;
    }
    // a Motzkin path cannot be all down steps, so *it is 0 or 1 here
    return *it == 0 ? SuffixClass{TailKind::Flat, run} : SuffixClass{TailKind::Cusp, run};
}

std::vector<BigInt> suffix_counts(int n, int cap) {
    if (n < 1) throw std::domain_error("suffix counts need a positive step count");
    if (n > cap) throw std::domain_error("enumeration too large");
    std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (const Path& p : enumerate_motzkin(n + 1, n + 1)) {
        const SuffixClass c = suffix_class(p);
        const std::size_t index =
            c.kind == TailKind::Flat ? 2 * static_cast<std::size_t>(c.run)
                                     : 2 * static_cast<std::size_t>(c.run) - 1;
        counts.at(index) += 1;
    }
    return counts;
}

BigInt motzkin_number(int n) {
    if (n < 0) throw std::domain_error("negative index");
    std::vector<BigInt> m(static_cast<std::size_t>(n) + 1);
    m[0] = 1;
    for (int i = 0; i < n; ++i) {
        BigInt next = m[static_cast<std::size_t>(i)];
        for (int k = 0; k <= i - 1; ++k)
            next += m[static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(i - 1 - k)];
        m[static_cast<std::size_t>(i) + 1] = next;
    }
    return m[static_cast<std::size_t>(n)];
}

BigInt catalan_number(int n) {
    if (n < 0) throw std::domain_error("negative index");
    return factorial(2 * n) / (factorial(n) * factorial(n + 1));
}

BigInt d_count(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("flat count out of range");
    if ((n - k) % 2 != 0) return 0;
    return binomial(n, k) * catalan_number((n - k) / 2);
}

Path insert_flat(const Path& p, std::size_t pos) {
    if (pos > p.size()) throw std::domain_error("insert position out of range");
    Path out;
    out.reserve(p.size() + 1);
    out.insert(out.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(pos));
    out.push_back(0);
    out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(pos), p.end());
    return out;
}

Path flatten_cusp(const Path& p, std::size_t pos) {
    if (pos + 1 >= p.size() || p[pos] != 1 || p[pos + 1] != -1)
        throw std::domain_error("no cusp at position");
    Path out;
    out.reserve(p.size() - 1);
    out.insert(out.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(pos));
    out.push_back(0);
    out.insert(out.end(), p.begin() + static_cast<std::ptrdiff_t>(pos) + 2, p.end());
    return out;
}

std::string path_to_text(const Path& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(static_cast<int>(p[i]));
    }
    out += ')';
    return out;
}

namespace {

Path parse_step_list(const std::string& body) {
    Path out;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i; };
    skip_ws();
    while (i < body.size()) {
        int sign = 1;
        if (body[i] == '-') {
            sign = -1;
            ++i;
        } else if (body[i] == '+') {
            ++i;
        }
        if (i >= body.size() || (body[i] != '0' && body[i] != '1'))
            throw std::invalid_argument("unrecognized step in path: " + body);
        out.push_back(static_cast<Step>(sign * (body[i] - '0')));
        ++i;
        skip_ws();
        if (i < body.size()) {
            if (body[i] != ',') throw std::invalid_argument("expected ',' in path: " + body);
            ++i;
            skip_ws();
            if (i == body.size()) throw std::invalid_argument("trailing ',' in path: " + body);
        }
    }
    return out;
}

}  // namespace

Path parse_path(const std::string& text) {
    std::string body = text;
    // strip surrounding whitespace
    const auto first = body.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty path text");
    const auto last = body.find_last_not_of(" \t");
    body = body.substr(first, last - first + 1);

    if (body.front() == '(') {
        if (body.back() != ')') throw std::invalid_argument("unbalanced parentheses in path: " + text);
        body = body.substr(1, body.size() - 2);
    }
    if (body.find_first_of("UuFfDd") != std::string::npos) {
        Path out;
        for (char c : body) {
            switch (c) {
                case 'U': case 'u': out.push_back(1); break;
                case 'F': case 'f': out.push_back(0); break;
                case 'D': case 'd': out.push_back(-1); break;
                case ' ': case '\t': case ',': break;
                default: throw std::invalid_argument(std::string("unrecognized glyph '") + c + "' in path");
            }
        }
        return out;
    }
    return parse_step_list(body);
}

}  // namespace tforge
