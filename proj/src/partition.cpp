#include "symspec/partition.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "symspec/errors.hpp"

namespace symspec {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    return os.str();
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    if (p.rows() > 0) cols.assign(p.parts()[0], 0);
    for (int i = 0; i < p.rows(); ++i)
        for (int j = 0; j < p.parts()[i]; ++j) cols[j]++;
    return Partition(std::move(cols));
}

HookData hook_data(const Partition& p) {
    const Partition conj = conjugate(p);
    HookData hd;
    hd.hooks.resize(p.rows());
    Integer product(1);
    for (int i = 0; i < p.rows(); ++i) {
        hd.hooks[i].resize(p.parts()[i]);
        for (int j = 0; j < p.parts()[i]; ++j) {
            const int arm = p.parts()[i] - j - 1;
            const int leg = conj.parts()[j] - i - 1;
            hd.hooks[i][j] = arm + leg + 1;
            product *= hd.hooks[i][j];
        }
    }
    hd.dimension = factorial(p.size()) / product;
    return hd;
}

Integer dimension_determinant(const Partition& p) {
    const int k = p.rows();
    Integer num = factorial(p.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            num *= p.parts()[i] - p.parts()[j] - (i + 1) + (j + 1);
    Integer den(1);
    for (int i = 0; i < k; ++i) den *= factorial(p.parts()[i] + k - (i + 1));
    Rational q = make_rational(num, den);
    if (q.get_den() != 1)
        throw std::logic_error("determinant dimension formula gave a non-integer");
    return q.get_num();
}

ShapeStatistics::ShapeStatistics(Integer content_sum, Integer content_square_sum,
                                 Integer pair_count)
    : content_sum_(std::move(content_sum)),
      content_square_sum_(std::move(content_square_sum)),
      pair_count_(std::move(pair_count)) {}

Rational ShapeStatistics::theta() const {
    if (pair_count_ == 0)
        throw DegenerateShapeError("theta undefined for shapes with fewer than two boxes");
    return make_rational(content_sum_, pair_count_);
}

ShapeStatistics shape_statistics(const Partition& p) {
    Integer boxwise(0), squares(0);
    for (int i = 0; i < p.rows(); ++i) {
        for (int j = 0; j < p.parts()[i]; ++j) {
            const long c = j - i;
            boxwise += c;
            squares += c * c;
        }
    }
    Integer binom_form(0);
    for (int part : p.parts()) binom_form += binomial(part, 2);
    const Partition transposed = conjugate(p);
    for (int part : transposed.parts()) binom_form -= binomial(part, 2);
    if (boxwise != binom_form)
        throw std::logic_error("content sum forms disagree");
    return ShapeStatistics(boxwise, squares, binomial(p.size(), 2));
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        emit_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

namespace {

int parse_positive_int(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected a number", pos);
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000'000L) throw ParseError("number too large", pos);
        ++pos;
    }
    return static_cast<int>(value);
}

}  // namespace

Partition parse_shape_spec(const std::string& text) {
    if (text.empty()) throw ParseError("empty shape spec", 0);
    if (text.rfind("stair:", 0) == 0) {
        std::size_t pos = 6;
        const int k = parse_positive_int(text, pos);
        if (pos != text.size()) throw ParseError("trailing characters", pos);
        if (k < 1) throw ParseError("stair:k requires k >= 1", 6);
        std::vector<int> parts(k);
        for (int i = 0; i < k; ++i) parts[i] = k - i;
        return Partition(std::move(parts));
    }
    if (text.rfind("hook:", 0) == 0) {
        std::size_t pos = 5;
        const int n = parse_positive_int(text, pos);
        if (pos != text.size()) throw ParseError("trailing characters", pos);
        if (n < 2) throw ParseError("hook:N requires N >= 2", 5);
        return n == 2 ? Partition{1, 1} : Partition{n - 1, 1};
    }
    std::vector<int> parts;
    std::size_t pos = 0;
    while (true) {
        const std::size_t tok = pos;
        const int part = parse_positive_int(text, pos);
        if (part < 1) throw ParseError("parts must be positive", tok);
        if (!parts.empty() && part > parts.back())
            throw ParseError("parts must be weakly decreasing", tok);
        parts.push_back(part);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return Partition(std::move(parts));
}

}  // namespace symspec
