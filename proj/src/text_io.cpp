#include "bcum/text_io.hpp"

#include <cctype>

namespace bcum {

namespace {

std::string term_string(const Rational& c, std::size_t k)
{
    if (k == 0)
        return c.str();
    std::string var = k == 1 ? "t" : "t^" + std::to_string(k);
    if (c == Rational(1))
        return var;
    if (c == Rational(-1))
        return "-" + var;
    return c.str() + "*" + var;
}

}  // namespace

std::string to_string(const Polynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    const auto cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (cs[k].is_zero())
            continue;
        if (out.empty()) {
            out = term_string(cs[k], k);
        } else if (cs[k].sign() < 0) {
            out += " - " + term_string(-cs[k], k);
        } else {
            out += " + " + term_string(cs[k], k);
        }
    }
    return out;
}

std::string to_string(const PolyForm& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    if (!a.part0.is_zero())
        out = to_string(a.part0);
    if (!a.part1.is_zero()) {
        std::string one = a.part1 == Polynomial::constant(Rational(1)) ? "dt" : "(" + to_string(a.part1) + ")dt";
        out = out.empty() ? one : out + " + " + one;
    }
    return out;
}

std::string to_string(const Cochain& c)
{
    return "(" + c.v0.str() + ", " + c.v1.str() + "; " + c.edge.str() + " dt)";
}

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error(what + " at position " + std::to_string(position + 1)), position_(position)
{
}

namespace {

// Recursive descent over
//   form   := ['+'|'-'] term {('+'|'-') term}
//   term   := factor {['*'] factor}
//   factor := integer ['/' integer] | 't' ['^' integer] | 'dt' | '(' form ')'
class FormReader {
public:
    FormReader(std::string_view text, std::size_t offset) : s_(text), offset_(offset) {}

    PolyForm read_all()
    {
        PolyForm f = form();
        skip_ws();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(offset_ + pos_, what); }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    bool starts_factor()
    {
        skip_ws();
        if (pos_ >= s_.size())
            return false;
        const char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'd' || c == '(';
    }

    PolyForm form()
    {
        bool negate = false;
        if (peek('+') || peek('-')) {
            negate = s_[pos_] == '-';
            ++pos_;
        }
        PolyForm acc = term();
        if (negate)
            acc *= Rational(-1);
        while (peek('+') || peek('-')) {
            const bool minus = s_[pos_] == '-';
            ++pos_;
            PolyForm t = term();
            if (minus)
                acc -= t;
            else
                acc += t;
        }
        return acc;
    }

    PolyForm term()
    {
        PolyForm acc = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                acc = wedge(acc, factor());
            } else if (starts_factor()) {
                acc = wedge(acc, factor());
            } else {
                return acc;
            }
        }
    }

    std::string digits()
    {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::string(s_.substr(start, pos_ - start));
    }

    PolyForm factor()
    {
        skip_ws();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (peek('/')) {
                ++pos_;
                const std::size_t den_pos = pos_;
                std::string den = digits();
                if (den.find_first_not_of('0') == std::string::npos) {
                    pos_ = den_pos;
                    fail("zero denominator");
                }
                num += "/" + den;
            }
            return PolyForm::zero_form(Polynomial::constant(Rational::parse(num)));
        }
        if (c == 't') {
            ++pos_;
            std::size_t k = 1;
            if (peek('^')) {
                ++pos_;
                const std::size_t exp_pos = pos_;
                std::string e = digits();
                if (e.size() > 4) {
                    pos_ = exp_pos;
                    fail("exponent too large");
                }
                k = std::stoul(e);
            }
            return PolyForm::monomial(k, false);
        }
        if (c == 'd') {
            if (pos_ + 1 < s_.size() && s_[pos_ + 1] == 't') {
                pos_ += 2;
                return PolyForm::monomial(0, true);
            }
            fail("expected 'dt'");
        }
        if (c == '(') {
            ++pos_;
            PolyForm inner = form();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return inner;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

}  // namespace

PolyForm parse_form(std::string_view text)
{
    return FormReader(text, 0).read_all();
}

std::vector<PolyForm> parse_form_tuple(std::string_view text)
{
    std::vector<PolyForm> out;
    std::size_t start = 0;
    for (;;) {
        const auto semi = text.find(';', start);
        const auto piece = text.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        out.push_back(FormReader(piece, start).read_all());
        if (semi == std::string_view::npos)
            break;
        start = semi + 1;
    }
    return out;
}

nlohmann::json to_json(const Rational& r)
{
    return r.fraction_str();
}

namespace {

nlohmann::json coeff_array(const Polynomial& p)
{
    auto arr = nlohmann::json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(to_json(c));
    return arr;
}

Polynomial poly_from_array(const nlohmann::json& arr)
{
    std::vector<Rational> cs;
    for (const auto& c : arr)
        cs.push_back(Rational::parse(c.get<std::string>()));
    return Polynomial(std::move(cs));
}

}  // namespace

nlohmann::json to_json(const PolyForm& a)
{
    return {{"part0", coeff_array(a.part0)}, {"part1", coeff_array(a.part1)}};
}

nlohmann::json to_json(const Cochain& c)
{
    return {{"v0", to_json(c.v0)}, {"v1", to_json(c.v1)}, {"edge", to_json(c.edge)}};
}

PolyForm form_from_json(const nlohmann::json& j)
{
    return {poly_from_array(j.at("part0")), poly_from_array(j.at("part1"))};
}

Cochain cochain_from_json(const nlohmann::json& j)
{
    return {Rational::parse(j.at("v0").get<std::string>()), Rational::parse(j.at("v1").get<std::string>()),
            Rational::parse(j.at("edge").get<std::string>())};
}

}  // namespace bcum
