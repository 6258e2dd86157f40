#include "exactla/json_io.hpp"

#include <cctype>
#include <string>

#include "exactla/error.hpp"

namespace exactla {

using nlohmann::json;

namespace {

bool is_decimal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

BigInt parse_bigint(std::string_view s, const std::string& field)
{
    std::string str(s);
    if (!str.empty() && str.front() == '+')
        str.erase(0, 1);
    if (!is_decimal(str))
        throw ParseError(field + ": '" + std::string(s) + "' is not a decimal integer");
    return BigInt(str, 10);
}

BigInt bigint_from_json(const json& j, const std::string& field)
{
    if (j.is_string())
        return parse_bigint(j.get<std::string>(), field);
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return BigInt(std::to_string(j.get<unsigned long long>()), 10);
        return BigInt(std::to_string(j.get<long long>()), 10);
    }
    throw ParseError(field + ": expected an integer (decimal string or JSON integer)");
}

std::size_t size_from_json(const json& j, const std::string& field)
{
    if (!j.is_number_integer() || j.get<long long>() < 0)
        throw ParseError(field + ": expected a nonnegative integer");
    return j.get<std::size_t>();
}

Scalar raw_from_json(const Ring& ring, const json& j, const std::string& field)
{
    switch (ring.kind()) {
    case Ring::Kind::integers:
    case Ring::Kind::modular:
        return Scalar{bigint_from_json(j, field)};
    case Ring::Kind::rationals: {
        if (j.is_object()) {
            if (!j.contains("num") || !j.contains("den"))
                throw ParseError(field + ": rational needs \"num\" and \"den\"");
            BigInt num = bigint_from_json(j.at("num"), field + ".num");
            BigInt den = bigint_from_json(j.at("den"), field + ".den");
            if (sgn(den) == 0)
                throw ParseError(field + ".den: zero denominator");
            return Scalar{BigRational(num, den)};
        }
        if (j.is_string()) {
            auto s = j.get<std::string>();
            auto slash = s.find('/');
            if (slash != std::string::npos) {
                BigInt num = parse_bigint(std::string_view(s).substr(0, slash), field);
                BigInt den = parse_bigint(std::string_view(s).substr(slash + 1), field);
                if (sgn(den) == 0)
                    throw ParseError(field + ": zero denominator");
                return Scalar{BigRational(num, den)};
            }
        }
        return Scalar{BigRational(bigint_from_json(j, field))};
    }
    case Ring::Kind::polynomial: {
        const json* arr = &j;
        if (j.is_object() && j.contains("coeffs"))
            arr = &j.at("coeffs");
        if (!arr->is_array())
            throw ParseError(field + ": polynomial must be a coefficient array");
        std::vector<Scalar> c;
        for (std::size_t k = 0; k < arr->size(); ++k)
            c.push_back(raw_from_json(ring.base(), (*arr)[k], field + "[" + std::to_string(k) + "]"));
        return Scalar{std::move(c)};
    }
    }
    throw ParseError(field + ": unknown ring kind");
}

Scalar element_from_json_at(const Ring& ring, const json& j, const std::string& field)
{
    return ring.canonical(raw_from_json(ring, j, field));
}

} // namespace

json ring_to_json(const Ring& ring)
{
    switch (ring.kind()) {
    case Ring::Kind::integers:
        return {{"kind", "int"}};
    case Ring::Kind::modular:
        return {{"kind", "mod"}, {"m", ring.modulus().get_str()}};
    case Ring::Kind::rationals:
        return {{"kind", "rat"}};
    case Ring::Kind::polynomial:
        return {{"kind", "poly"}, {"base", ring_to_json(ring.base())}};
    }
    return {};
}

Ring ring_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("ring: expected an object with a string \"kind\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "int")
        return Ring::integers();
    if (kind == "rat")
        return Ring::rationals();
    if (kind == "mod") {
        if (!j.contains("m"))
            throw ParseError("ring.m: missing modulus");
        BigInt m = bigint_from_json(j.at("m"), "ring.m");
        if (m < 1)
            throw ParseError("ring.m: modulus must be positive");
        return Ring::modular(m);
    }
    if (kind == "poly") {
        if (!j.contains("base"))
            throw ParseError("ring.base: missing base ring");
        return Ring::polynomial(ring_from_json(j.at("base")));
    }
    throw ParseError("ring.kind: unknown kind '" + kind + "'");
}

Ring parse_ring(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    if (!text.empty() && text.front() == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(std::string("ring: invalid JSON: ") + e.what());
        }
        return ring_from_json(j);
    }
    if (text == "int" || text == "Z")
        return Ring::integers();
    if (text == "rat" || text == "Q")
        return Ring::rationals();
    if (text.starts_with("mod:")) {
        BigInt m = parse_bigint(text.substr(4), "ring.m");
        if (m < 1)
            throw ParseError("ring.m: modulus must be positive");
        return Ring::modular(m);
    }
    if (text.starts_with("poly:"))
        return Ring::polynomial(parse_ring(text.substr(5)));
    throw ParseError("ring: cannot parse '" + std::string(text) + "' (use int, rat, mod:<m>, poly:<ring> or JSON)");
}

json element_to_json(const Ring& ring, const Scalar& x)
{
    switch (ring.kind()) {
    case Ring::Kind::integers:
    case Ring::Kind::modular:
        return std::get<BigInt>(x.rep).get_str();
    case Ring::Kind::rationals: {
        const auto& q = std::get<BigRational>(x.rep);
        return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
    }
    case Ring::Kind::polynomial: {
        json arr = json::array();
        for (const auto& c : ring.coefficients(x))
            arr.push_back(element_to_json(ring.base(), c));
        return arr;
    }
    }
    return nullptr;
}

Scalar element_from_json(const Ring& ring, const json& j) { return element_from_json_at(ring, j, "element"); }

json to_json(const RingElement& x) { return element_to_json(x.ring, x.value); }

json polynomial_to_json(const Polynomial<Ring>& f)
{
    json arr = json::array();
    for (const auto& c : f.coeffs())
        arr.push_back(element_to_json(f.ring(), c));
    return {{"coeffs", arr}};
}

Polynomial<Ring> polynomial_from_json(const Ring& base, const json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
        throw ParseError("polynomial: expected {\"coeffs\":[...]}");
    std::vector<Scalar> c;
    const auto& arr = j.at("coeffs");
    for (std::size_t k = 0; k < arr.size(); ++k)
        c.push_back(element_from_json_at(base, arr[k], "coeffs[" + std::to_string(k) + "]"));
    return Polynomial<Ring>(base, std::move(c));
}

json matrix_to_json(const Matrix<Ring>& a)
{
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c)
            row.push_back(element_to_json(a.ring(), a(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"ring", ring_to_json(a.ring())}, {"rows", a.rows()}, {"cols", a.cols()}, {"entries", rows}};
}

Matrix<Ring> matrix_from_json(const json& j, const std::optional<Ring>& ring_override)
{
    if (!j.is_object())
        throw ParseError("matrix: expected a JSON object");
    Ring ring = ring_override ? *ring_override
                              : (j.contains("ring") ? ring_from_json(j.at("ring"))
                                                    : throw ParseError("ring: missing (give it in the matrix or with --ring)"));
    if (!j.contains("entries") || !j.at("entries").is_array())
        throw ParseError("entries: expected an array of rows");
    const auto& entries = j.at("entries");
    for (std::size_t r = 0; r < entries.size(); ++r)
        if (!entries[r].is_array())
            throw ParseError("entries[" + std::to_string(r) + "]: expected an array");

    std::size_t rows = entries.size();
    std::size_t cols = rows == 0 ? 0 : entries[0].size();
    if (j.contains("rows")) {
        std::size_t declared = size_from_json(j.at("rows"), "rows");
        if (declared != rows)
            throw ShapeError("rows: declared " + std::to_string(declared) + " but entries has " + std::to_string(rows));
    }
    if (j.contains("cols")) {
        std::size_t declared = size_from_json(j.at("cols"), "cols");
        if (rows == 0)
            cols = declared;
        else if (declared != cols)
            throw ShapeError("cols: declared " + std::to_string(declared) + " but entries[0] has " +
                             std::to_string(cols));
    }
    std::vector<Scalar> data;
    data.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols)
            throw ShapeError("entries[" + std::to_string(r) + "]: has " + std::to_string(entries[r].size()) +
                             " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < cols; ++c)
            data.push_back(element_from_json_at(ring, entries[r][c],
                                                "entries[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
    return Matrix<Ring>(ring, rows, cols, std::move(data));
}

Matrix<Ring> to_descriptor_form(const Matrix<PolynomialRing<Ring>>& a)
{
    Ring target = Ring::polynomial(a.ring().base());
    return entrywise_map(a, target, [&](const Polynomial<Ring>& f) { return from_polynomial(target, f); });
}

Matrix<PolynomialRing<Ring>> to_polynomial_form(const Matrix<Ring>& a)
{
    PolynomialRing<Ring> target(a.ring().base());
    return entrywise_map(a, target, [&](const Scalar& x) { return as_polynomial(a.ring(), x); });
}

json matrix_to_json(const Matrix<PolynomialRing<Ring>>& a) { return matrix_to_json(to_descriptor_form(a)); }

json charpoly_to_json(const CharPolyData<Ring>& data)
{
    json c = json::array();
    for (const auto& x : data.c)
        c.push_back(element_to_json(data.chi.ring(), x));
    json d = json::array();
    for (const auto& m : data.d)
        d.push_back(matrix_to_json(m));
    return {{"chi", polynomial_to_json(data.chi)}, {"c", c}, {"D", d}};
}

CharPolyData<Ring> charpoly_from_json(const Ring& base, const json& j)
{
    if (!j.is_object() || !j.contains("chi") || !j.contains("c") || !j.contains("D"))
        throw ParseError("charpoly: expected {\"chi\",\"c\",\"D\"}");
    auto chi = polynomial_from_json(base, j.at("chi"));
    const auto& cj = j.at("c");
    if (!cj.is_array() || cj.empty())
        throw ParseError("c: expected a nonempty array");
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < cj.size(); ++k)
        c.push_back(element_from_json_at(base, cj[k], "c[" + std::to_string(k) + "]"));
    std::vector<Matrix<Ring>> d;
    for (const auto& m : j.at("D"))
        d.push_back(matrix_from_json(m, base));
    const std::size_t n = c.size() - 1;
    if (d.size() != n)
        throw ShapeError("D: expected " + std::to_string(n) + " matrices");
    return CharPolyData<Ring>{n, std::move(chi), std::move(c), std::move(d)};
}

} // namespace exactla
