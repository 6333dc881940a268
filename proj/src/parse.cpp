#include "sl2lab/parse.hpp"

#include <cctype>
#include <sstream>

#include "sl2lab/errors.hpp"

namespace sl2lab {

ExprAst ExprAst::make_scalar(GaussianRational v) {
    ExprAst a;
    a.kind = Kind::Scalar;
    a.scalar = std::move(v);
    return a;
}

ExprAst ExprAst::make_gen(Gen g) {
    ExprAst a;
    a.kind = Kind::Gen;
    a.gen = g;
    return a;
}

ExprAst ExprAst::add(ExprAst l, ExprAst r) {
    ExprAst a;
    a.kind = Kind::Add;
    a.children.push_back(std::move(l));
    a.children.push_back(std::move(r));
    return a;
}

ExprAst ExprAst::sub(ExprAst l, ExprAst r) {
    ExprAst a;
    a.kind = Kind::Sub;
    a.children.push_back(std::move(l));
    a.children.push_back(std::move(r));
    return a;
}

ExprAst ExprAst::neg(ExprAst e) {
    ExprAst a;
    a.kind = Kind::Neg;
    a.children.push_back(std::move(e));
    return a;
}

ExprAst ExprAst::mul(std::vector<ExprAst> factors) {
    if (factors.size() == 1) return std::move(factors.front());
    ExprAst a;
    a.kind = Kind::Mul;
    a.children = std::move(factors);
    return a;
}

ExprAst ExprAst::pow(ExprAst base, int e) {
    ExprAst a;
    a.kind = Kind::Pow;
    a.children.push_back(std::move(base));
    a.exponent = e;
    return a;
}

bool operator==(const ExprAst& a, const ExprAst& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprAst::Kind::Scalar: return a.scalar == b.scalar;
        case ExprAst::Kind::Gen: return a.gen == b.gen;
        case ExprAst::Kind::Pow:
            return a.exponent == b.exponent && a.children == b.children;
        default: return a.children == b.children;
    }
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

struct Token {
    enum Type { Int, Generator, ImagI, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Type type;
    std::string text;  // Int digits
    Gen gen = Gen::H;
    int line = 1;
    int col = 1;
};

const char* token_name(Token::Type t) {
    switch (t) {
        case Token::Int: return "integer";
        case Token::Generator: return "generator";
        case Token::ImagI: return "'i'";
        case Token::Plus: return "'+'";
        case Token::Minus: return "'-'";
        case Token::Star: return "'*'";
        case Token::Slash: return "'/'";
        case Token::Caret: return "'^'";
        case Token::LParen: return "'('";
        case Token::RParen: return "')'";
        case Token::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto bump = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (src[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump(1);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        // U+2212 (minus sign) is accepted as '-'
        if (static_cast<unsigned char>(c) == 0xe2 && i + 2 < src.size() &&
            static_cast<unsigned char>(src[i + 1]) == 0x88 &&
            static_cast<unsigned char>(src[i + 2]) == 0x92) {
            t.type = Token::Minus;
            out.push_back(t);
            bump(3);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.type = Token::Int;
            t.text = src.substr(i, j - i);
            out.push_back(t);
            bump(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
            std::string word = src.substr(i, j - i);
            if (word == "i") {
                t.type = Token::ImagI;
            } else if (word.size() == 1 && gen_from_char(word[0])) {
                t.type = Token::Generator;
                t.gen = *gen_from_char(word[0]);
            } else {
                throw ParseError("unknown identifier '" + word + "' at " + std::to_string(line) +
                                     ":" + std::to_string(col) +
                                     " (expected one of x, y, h, A, B, C, i)",
                                 line, col);
            }
            out.push_back(t);
            bump(j - i);
            continue;
        }
        switch (c) {
            case '+': t.type = Token::Plus; break;
            case '-': t.type = Token::Minus; break;
            case '*': t.type = Token::Star; break;
            case '/': t.type = Token::Slash; break;
            case '^': t.type = Token::Caret; break;
            case '(': t.type = Token::LParen; break;
            case ')': t.type = Token::RParen; break;
            default:
                throw ParseError("unexpected character '" + std::string(1, c) + "' at " +
                                     std::to_string(line) + ":" + std::to_string(col),
                                 line, col);
        }
        out.push_back(t);
        bump(1);
    }
    Token end;
    end.type = Token::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
  public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    ExprAst parse() {
        ExprAst e = expr();
        expect(Token::End, "operator or end of input");
        return e;
    }

  private:
    const Token& peek(size_t ahead = 0) const {
        size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    Token take() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw ParseError("syntax error at " + std::to_string(t.line) + ":" +
                             std::to_string(t.col) + ": expected " + expected + ", found " +
                             token_name(t.type),
                         t.line, t.col);
    }
    void expect(Token::Type type, const std::string& expected) {
        if (peek().type != type) fail(expected);
        take();
    }

    ExprAst expr() {
        ExprAst left = term();
        while (peek().type == Token::Plus || peek().type == Token::Minus) {
            bool plus = take().type == Token::Plus;
            ExprAst right = term();
            left = plus ? ExprAst::add(std::move(left), std::move(right))
                        : ExprAst::sub(std::move(left), std::move(right));
        }
        return left;
    }

    ExprAst term() {
        std::vector<ExprAst> factors;
        factors.push_back(unary());
        while (peek().type == Token::Star) {
            take();
            factors.push_back(unary());
        }
        return ExprAst::mul(std::move(factors));
    }

    ExprAst unary() {
        if (peek().type == Token::Minus) {
            take();
            return ExprAst::neg(unary());
        }
        return power();
    }

    ExprAst power() {
        ExprAst base = primary();
        if (peek().type == Token::Caret) {
            take();
            if (peek().type != Token::Int) fail("a nonnegative integer exponent");
            if (peek().text.size() > 6) fail("a smaller exponent");
            Token e = take();
            long v = std::stol(e.text);
            return ExprAst::pow(std::move(base), static_cast<int>(v));
        }
        return base;
    }

    Rational int_token_value() {
        Token t = take();
        return Rational(mpz_class(t.text));
    }

    ExprAst primary() {
        switch (peek().type) {
            case Token::Int: {
                Rational q = int_token_value();
                if (peek().type == Token::Slash && peek(1).type == Token::Int) {
                    take();
                    Rational den = int_token_value();
                    if (den.is_zero()) fail("a nonzero denominator");
                    q /= den;
                }
                // fused imaginary literal "3/2*i", unless the i is a pow base
                if (peek().type == Token::Star && peek(1).type == Token::ImagI &&
                    peek(2).type != Token::Caret) {
                    take();
                    take();
                    return ExprAst::make_scalar(GaussianRational(Rational(0), q));
                }
                return ExprAst::make_scalar(GaussianRational(q));
            }
            case Token::ImagI:
                take();
                return ExprAst::make_scalar(GaussianRational::i());
            case Token::Generator:
                return ExprAst::make_gen(take().gen);
            case Token::LParen: {
                take();
                ExprAst e = expr();
                expect(Token::RParen, "')'");
                return e;
            }
            default:
                fail("a scalar literal, a generator, or '('");
        }
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

}  // namespace

ExprAst parse_expr(const std::string& src) {
    if (src.find_first_not_of(" \t\r\n") == std::string::npos)
        throw ParseError("empty expression", 1, 1);
    return Parser(src).parse();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

// precedence levels: Add/Sub 1, Mul 2, Neg 3, Pow 4, atoms 5
int node_level(const ExprAst& a) {
    switch (a.kind) {
        case ExprAst::Kind::Add:
        case ExprAst::Kind::Sub: return 1;
        case ExprAst::Kind::Mul: return 2;
        case ExprAst::Kind::Neg: return 3;
        case ExprAst::Kind::Pow: return 4;
        case ExprAst::Kind::Gen: return 5;
        case ExprAst::Kind::Scalar: return 5;
    }
    return 5;
}

// A scalar literal prints as one primary unless it is a mixed value.
bool scalar_is_primary(const GaussianRational& s) { return s.is_real() || s.is_imaginary(); }

void print_node(const ExprAst& a, int parent_level, std::ostream& out) {
    int level = node_level(a);
    bool parens = level < parent_level;
    if (a.kind == ExprAst::Kind::Scalar && !scalar_is_primary(a.scalar) && parent_level > 1)
        parens = true;
    if (parens) out << "(";
    switch (a.kind) {
        case ExprAst::Kind::Scalar: out << scalar_str(a.scalar); break;
        case ExprAst::Kind::Gen: out << gen_char(a.gen); break;
        case ExprAst::Kind::Add:
            print_node(a.children[0], 1, out);
            out << " + ";
            print_node(a.children[1], 2, out);
            break;
        case ExprAst::Kind::Sub:
            print_node(a.children[0], 1, out);
            out << " - ";
            print_node(a.children[1], 2, out);
            break;
        case ExprAst::Kind::Neg:
            out << "-";
            print_node(a.children[0], 3, out);
            break;
        case ExprAst::Kind::Mul: {
            bool first = true;
            for (const ExprAst& c : a.children) {
                if (!first) out << "*";
                first = false;
                // nested Mul children came from parentheses; keep them grouped
                print_node(c, c.kind == ExprAst::Kind::Mul ? 5 : 3, out);
            }
            break;
        }
        case ExprAst::Kind::Pow: {
            const ExprAst& base = a.children[0];
            bool bare = base.kind == ExprAst::Kind::Gen ||
                        (base.kind == ExprAst::Kind::Scalar &&
                         ((base.scalar.is_real() && base.scalar.re.sign() >= 0) ||
                          base.scalar == GaussianRational::i()));
            if (bare) {
                print_node(base, 0, out);
            } else {
                out << "(";
                print_node(base, 1, out);
                out << ")";
            }
            out << "^" << a.exponent;
            break;
        }
    }
    if (parens) out << ")";
}

}  // namespace

std::string print_expr(const ExprAst& a) {
    std::ostringstream out;
    print_node(a, 1, out);
    return out.str();
}

// ---------------------------------------------------------------------------
// Lowering

ExprSum lower_to_sum(const ExprAst& a) {
    switch (a.kind) {
        case ExprAst::Kind::Scalar: return ExprSum::scalar(a.scalar);
        case ExprAst::Kind::Gen: return ExprSum::generator(a.gen);
        case ExprAst::Kind::Add: return lower_to_sum(a.children[0]) + lower_to_sum(a.children[1]);
        case ExprAst::Kind::Sub: return lower_to_sum(a.children[0]) - lower_to_sum(a.children[1]);
        case ExprAst::Kind::Neg: return GaussianRational(-1L) * lower_to_sum(a.children[0]);
        case ExprAst::Kind::Mul: {
            ExprSum acc = ExprSum::scalar(GaussianRational(1));
            for (const ExprAst& c : a.children) acc = acc * lower_to_sum(c);
            return acc;
        }
        case ExprAst::Kind::Pow: {
            ExprSum acc = ExprSum::scalar(GaussianRational(1));
            ExprSum base = lower_to_sum(a.children[0]);
            for (int k = 0; k < a.exponent; ++k) acc = acc * base;
            return acc;
        }
    }
    throw InternalInconsistencyError("unreachable AST kind");
}

GaussianRational parse_scalar(const std::string& src) {
    ExprSum e = lower_to_sum(parse_expr(src)).collected();
    GaussianRational value;
    for (const auto& t : e.terms) {
        if (!t.word.empty())
            throw ParseError("expected a scalar expression, found generator '" +
                                 std::string(1, gen_char(t.word.front())) + "'",
                             1, 1);
        value += t.coeff;
    }
    return value;
}

Poly parse_poly(const std::string& src) {
    ExprSum e = lower_to_sum(parse_expr(src)).collected();
    Poly p;
    for (const auto& t : e.terms) {
        for (Gen g : t.word) {
            if (g != Gen::H)
                throw ParseError("expected a polynomial in h, found generator '" +
                                     std::string(1, gen_char(g)) + "'",
                                 1, 1);
        }
        p += Poly::monomial(static_cast<int>(t.word.size()), t.coeff);
    }
    return p;
}

ModuleElement parse_module_element(const GaussianRational& lambda, const std::string& src) {
    size_t semi = src.find(';');
    std::string f_src = src.substr(0, semi == std::string::npos ? src.size() : semi);
    Poly f = parse_poly(f_src);
    Poly g;
    if (semi != std::string::npos) {
        std::string g_src = src.substr(semi + 1);
        if (g_src.find(';') != std::string::npos)
            throw ParseError("module element has more than one ';'", 1, 1);
        g = parse_poly(g_src);
    }
    return ModuleElement(lambda, std::move(f), std::move(g));
}

}  // namespace sl2lab
