// Copyright 2026 The phasefold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "phasefold/qasm.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <set>

namespace phasefold {

namespace {

enum class Tok { Ident, Int, Real, String, Symbol, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
   public:
    explicit Lexer(std::string_view src) : src_(src) {}

    // Returns false and sets `error` on an unrecognized character.
    bool tokenize(std::vector<Token> &out, ParseDiagnostic &error) {
        while (true) {
            skip_space_and_comments();
            Token t;
            t.line = line_;
            t.column = column_;
            if (pos_ >= src_.size()) {
                t.type = Tok::End;
                out.push_back(t);
                return true;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.type = Tok::Ident;
                while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    t.text += advance();
                }
            } else if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
                t.type = Tok::Int;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    t.text += advance();
                }
                if (pos_ < src_.size() && src_[pos_] == '.') {
                    t.type = Tok::Real;
                    t.text += advance();
                    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                        t.text += advance();
                    }
                }
                if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
                    size_t save = pos_;
                    int save_col = column_;
                    std::string exp(1, advance());
                    if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) {
                        exp += advance();
                    }
                    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                            exp += advance();
                        }
                        t.type = Tok::Real;
                        t.text += exp;
                    } else {
                        pos_ = save;
                        column_ = save_col;
                    }
                }
            } else if (c == '"') {
                t.type = Tok::String;
                advance();
                while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') {
                    t.text += advance();
                }
                if (pos_ >= src_.size() || src_[pos_] != '"') {
                    error = ParseDiagnostic{t.line, t.column, "unterminated string literal", DiagnosticKind::SyntaxError};
                    return false;
                }
                advance();
            } else if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                t.type = Tok::Symbol;
                t.text = "->";
                advance();
                advance();
            } else if (std::string_view(";,[](){}*/+-^=<>!").find(c) != std::string_view::npos) {
                t.type = Tok::Symbol;
                t.text = std::string(1, advance());
            } else {
                error = ParseDiagnostic{
                    t.line, t.column, std::string("unexpected character '") + c + "'", DiagnosticKind::SyntaxError};
                return false;
            }
            out.push_back(std::move(t));
        }
    }

   private:
    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
                while (pos_ < src_.size() && src_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

// Angle expression value. Integer arithmetic and multiples of pi are kept
// exact; anything else becomes a plain real.
struct Value {
    enum Kind { Rational, PiRational, Real } kind = Rational;
    int64_t num = 0;
    int64_t den = 1;
    double real = 0;

    double approx() const {
        switch (kind) {
            case Rational:
                return static_cast<double>(num) / static_cast<double>(den);
            case PiRational:
                return static_cast<double>(num) / static_cast<double>(den) * std::numbers::pi;
            case Real:
                return real;
        }
        return real;
    }

    static Value real_value(double v) {
        Value r;
        r.kind = Real;
        r.real = v;
        return r;
    }

    static Value rational(Kind kind, int64_t n, int64_t d) {
        Value r;
        r.kind = kind;
        if (d < 0) {
            n = -n;
            d = -d;
        }
        int64_t g = std::gcd(n, d);
        if (g == 0) {
            g = 1;
        }
        r.num = n / g;
        r.den = d / g;
        return r;
    }
};

bool checked_mul(int64_t a, int64_t b, int64_t &out) {
    return !__builtin_mul_overflow(a, b, &out);
}

bool checked_add(int64_t a, int64_t b, int64_t &out) {
    return !__builtin_add_overflow(a, b, &out);
}

Value multiply(const Value &a, const Value &b) {
    if (a.kind != Value::Real && b.kind != Value::Real &&
        !(a.kind == Value::PiRational && b.kind == Value::PiRational)) {
        int64_t n, d;
        if (checked_mul(a.num, b.num, n) && checked_mul(a.den, b.den, d)) {
            auto kind = (a.kind == Value::PiRational || b.kind == Value::PiRational) ? Value::PiRational : Value::Rational;
            return Value::rational(kind, n, d);
        }
    }
    return Value::real_value(a.approx() * b.approx());
}

// Caller checks for a zero divisor.
Value divide(const Value &a, const Value &b) {
    if (a.kind != Value::Real && b.kind != Value::Real && !(a.kind == Value::Rational && b.kind == Value::PiRational)) {
        int64_t n, d;
        if (checked_mul(a.num, b.den, n) && checked_mul(a.den, b.num, d)) {
            auto kind = a.kind == b.kind ? Value::Rational : Value::PiRational;
            return Value::rational(kind, n, d);
        }
    }
    return Value::real_value(a.approx() / b.approx());
}

Value add(const Value &a, const Value &b) {
    if (a.kind == b.kind && a.kind != Value::Real) {
        int64_t x, y, n, d;
        if (checked_mul(a.num, b.den, x) && checked_mul(b.num, a.den, y) && checked_add(x, y, n) &&
            checked_mul(a.den, b.den, d)) {
            return Value::rational(a.kind, n, d);
        }
    }
    return Value::real_value(a.approx() + b.approx());
}

Value negate(const Value &a) {
    Value r = a;
    if (a.kind == Value::Real || a.num == INT64_MIN) {
        return Value::real_value(-a.approx());
    }
    r.num = -a.num;
    return r;
}

struct Register {
    uint32_t offset;
    uint32_t size;
};

struct PendingGate {
    GateKind kind;
    uint32_t q0;
    uint32_t q1;
    Angle angle;
};

struct StatementError {
    ParseDiagnostic diagnostic;
};

class Parser {
   public:
    Parser(std::vector<Token> tokens, const ParseOptions &options) : toks_(std::move(tokens)), options_(options) {}

    ParseResult run() {
        ParseResult result;
        bool saw_header = false;
        while (peek().type != Tok::End) {
            size_t start = pos_;
            try {
                statement(saw_header);
            } catch (const StatementError &e) {
                result.diagnostics.push_back(e.diagnostic);
                recover(start);
            }
        }
        if (!saw_header && result.diagnostics.empty()) {
            result.diagnostics.push_back({1, 1, "missing 'OPENQASM 2.0;' header", DiagnosticKind::SyntaxError});
        }
        if (registers_.empty() && result.diagnostics.empty()) {
            result.diagnostics.push_back({1, 1, "no qreg declaration", DiagnosticKind::SyntaxError});
        }
        if (!result.diagnostics.empty()) {
            return result;
        }
        Circuit c(total_qubits_);
        c.reserve(gates_.size());
        for (const PendingGate &g : gates_) {
            switch (g.kind) {
                case GateKind::CX:
                    c.cx(g.q0, g.q1);
                    break;
                case GateKind::H:
                    c.h(g.q0);
                    break;
                case GateKind::X:
                    c.x(g.q0);
                    break;
                case GateKind::Rz:
                    c.rz(g.angle, g.q0);
                    break;
            }
        }
        result.circuit = std::move(c);
        return result;
    }

   private:
    const Token &peek() const { return toks_[pos_]; }
    const Token &next() {
        const Token &t = toks_[pos_];
        if (t.type != Tok::End) {
            ++pos_;
        }
        return t;
    }

    [[noreturn]] static void fail(const Token &at, DiagnosticKind kind, std::string message) {
        throw StatementError{ParseDiagnostic{at.line, at.column, std::move(message), kind}};
    }

    bool is_symbol(const Token &t, std::string_view s) const { return t.type == Tok::Symbol && t.text == s; }

    void expect_symbol(std::string_view s) {
        const Token &t = peek();
        if (!is_symbol(t, s)) {
            fail(t, DiagnosticKind::SyntaxError,
                 "expected '" + std::string(s) + "' but found " + (t.type == Tok::End ? "end of input" : "'" + t.text + "'"));
        }
        next();
    }

    // Skip the rest of a failed statement, including any braced body.
    void recover(size_t start) {
        int depth = 0;
        for (size_t i = start; i < pos_; i++) {
            if (is_symbol(toks_[i], "{")) ++depth;
            if (is_symbol(toks_[i], "}")) --depth;
        }
        if (pos_ > start && depth <= 0 && (is_symbol(toks_[pos_ - 1], ";") || is_symbol(toks_[pos_ - 1], "}"))) {
            return;
        }
        while (peek().type != Tok::End) {
            const Token &t = next();
            if (is_symbol(t, "{")) {
                ++depth;
            } else if (is_symbol(t, "}")) {
                if (--depth <= 0) {
                    return;
                }
            } else if (is_symbol(t, ";") && depth <= 0) {
                return;
            }
        }
    }

    void statement(bool &saw_header) {
        const Token &t = peek();
        if (t.type != Tok::Ident) {
            fail(t, DiagnosticKind::SyntaxError, "expected a statement but found '" + t.text + "'");
        }
        if (t.text == "OPENQASM") {
            if (saw_header || pos_ != 0) {
                fail(t, DiagnosticKind::SyntaxError, "OPENQASM header must be the first statement");
            }
            next();
            const Token &v = next();
            if (v.type != Tok::Real || v.text != "2.0") {
                fail(v, DiagnosticKind::SyntaxError, "only OPENQASM 2.0 is supported");
            }
            expect_symbol(";");
            saw_header = true;
            return;
        }
        if (!saw_header) {
            // Reported once; the rest of the file is still checked.
            saw_header = true;
            fail(t, DiagnosticKind::SyntaxError, "missing 'OPENQASM 2.0;' header");
        }
        if (t.text == "include") {
            next();
            if (peek().type != Tok::String) {
                fail(peek(), DiagnosticKind::SyntaxError, "include expects a quoted file name");
            }
            next();
            expect_symbol(";");
            return;
        }
        if (t.text == "qreg") {
            qreg();
            return;
        }
        static const std::set<std::string, std::less<>> unsupported_statements = {
            "creg", "measure", "barrier", "if", "gate", "opaque", "reset"};
        if (unsupported_statements.contains(t.text)) {
            fail(t, DiagnosticKind::UnsupportedGate, "unsupported statement '" + t.text + "'");
        }
        gate_statement();
    }

    void qreg() {
        next();
        const Token &name = next();
        if (name.type != Tok::Ident) {
            fail(name, DiagnosticKind::SyntaxError, "expected register name");
        }
        expect_symbol("[");
        const Token &size_tok = next();
        if (size_tok.type != Tok::Int) {
            fail(size_tok, DiagnosticKind::SyntaxError, "register size must be an integer");
        }
        uint64_t size = 0;
        auto [p, ec] = std::from_chars(size_tok.text.data(), size_tok.text.data() + size_tok.text.size(), size);
        if (ec != std::errc() || size == 0 || size > (uint64_t{1} << 31) || total_qubits_ + size > (uint64_t{1} << 31)) {
            fail(size_tok, DiagnosticKind::SyntaxError, "invalid register size " + size_tok.text);
        }
        expect_symbol("]");
        expect_symbol(";");
        if (registers_.contains(name.text)) {
            fail(name, DiagnosticKind::SyntaxError, "register '" + name.text + "' declared twice");
        }
        registers_[name.text] = Register{total_qubits_, static_cast<uint32_t>(size)};
        total_qubits_ += static_cast<uint32_t>(size);
    }

    uint32_t operand() {
        const Token &name = next();
        if (name.type != Tok::Ident) {
            fail(name, DiagnosticKind::SyntaxError, "expected a qubit operand");
        }
        if (!is_symbol(peek(), "[")) {
            fail(peek(), DiagnosticKind::SyntaxError, "qubit operands must be indexed, e.g. " + name.text + "[0]");
        }
        next();
        const Token &idx = next();
        if (idx.type != Tok::Int) {
            fail(idx, DiagnosticKind::SyntaxError, "qubit index must be an integer");
        }
        expect_symbol("]");
        auto it = registers_.find(name.text);
        if (it == registers_.end()) {
            fail(name, DiagnosticKind::UndeclaredQubit, "undeclared register '" + name.text + "'");
        }
        uint64_t i = 0;
        auto [p, ec] = std::from_chars(idx.text.data(), idx.text.data() + idx.text.size(), i);
        if (ec != std::errc() || i >= it->second.size) {
            fail(idx, DiagnosticKind::UndeclaredQubit,
                 name.text + "[" + idx.text + "] is out of range for a register of size " + std::to_string(it->second.size));
        }
        return it->second.offset + static_cast<uint32_t>(i);
    }

    Value primary() {
        const Token &t = next();
        if (t.type == Tok::Int) {
            int64_t v = 0;
            auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
            if (ec == std::errc()) {
                return Value::rational(Value::Rational, v, 1);
            }
            return Value::real_value(std::strtod(t.text.c_str(), nullptr));
        }
        if (t.type == Tok::Real) {
            return Value::real_value(std::strtod(t.text.c_str(), nullptr));
        }
        if (t.type == Tok::Ident && t.text == "pi") {
            return Value::rational(Value::PiRational, 1, 1);
        }
        if (is_symbol(t, "(")) {
            Value v = expression();
            expect_symbol(")");
            return v;
        }
        fail(t, DiagnosticKind::BadAngle, "unexpected '" + t.text + "' in angle expression");
    }

    Value unary() {
        if (is_symbol(peek(), "-")) {
            next();
            return negate(unary());
        }
        if (is_symbol(peek(), "+")) {
            next();
            return unary();
        }
        return primary();
    }

    Value term() {
        Value v = unary();
        while (is_symbol(peek(), "*") || is_symbol(peek(), "/")) {
            const Token &op = next();
            Value rhs = unary();
            if (op.text == "*") {
                v = multiply(v, rhs);
            } else {
                if (rhs.approx() == 0) {
                    fail(op, DiagnosticKind::BadAngle, "division by zero in angle expression");
                }
                v = divide(v, rhs);
            }
        }
        return v;
    }

    Value expression() {
        Value v = term();
        while (is_symbol(peek(), "+") || is_symbol(peek(), "-")) {
            const Token &op = next();
            Value rhs = term();
            v = add(v, op.text == "+" ? rhs : negate(rhs));
        }
        return v;
    }

    Angle angle_argument(const Token &at) {
        expect_symbol("(");
        Value v = expression();
        expect_symbol(")");
        if (v.kind == Value::PiRational) {
            return Angle::exact(v.num, v.den);
        }
        double radians = v.approx();
        if (!std::isfinite(radians)) {
            fail(at, DiagnosticKind::BadAngle, "angle is not a finite number");
        }
        if (auto exact = recognize_pi_multiple(radians)) {
            return *exact;
        }
        return Angle::radians(radians);
    }

    void gate_statement() {
        const Token &name_tok = next();
        std::string name = name_tok.text;
        static const std::map<std::string, int, std::less<>> arity = {
            {"h", 1}, {"x", 1}, {"t", 1}, {"tdg", 1}, {"s", 1}, {"sdg", 1}, {"z", 1}, {"rz", 1}, {"cx", 2}, {"ccx", 3}};
        auto found = arity.find(name);
        if (found == arity.end() || (name == "ccx" && !options_.decompose_ccx)) {
            fail(name_tok, DiagnosticKind::UnsupportedGate, "unsupported gate '" + name + "'");
        }
        Angle angle;
        if (name == "rz") {
            if (!is_symbol(peek(), "(")) {
                fail(peek(), DiagnosticKind::SyntaxError, "rz requires an angle argument");
            }
            angle = angle_argument(name_tok);
        } else if (is_symbol(peek(), "(")) {
            fail(peek(), DiagnosticKind::SyntaxError, "gate '" + name + "' takes no parameters");
        }
        std::vector<uint32_t> qs;
        qs.push_back(operand());
        while (is_symbol(peek(), ",")) {
            next();
            qs.push_back(operand());
        }
        if (static_cast<int>(qs.size()) != found->second) {
            fail(name_tok, DiagnosticKind::SyntaxError,
                 "gate '" + name + "' expects " + std::to_string(found->second) + " operand(s), got " +
                     std::to_string(qs.size()));
        }
        expect_symbol(";");
        for (size_t i = 0; i < qs.size(); i++) {
            for (size_t j = i + 1; j < qs.size(); j++) {
                if (qs[i] == qs[j]) {
                    fail(name_tok, DiagnosticKind::SyntaxError, "gate '" + name + "' uses the same qubit twice");
                }
            }
        }

        auto one = [&](GateKind kind, Angle a = Angle()) { gates_.push_back({kind, qs[0], qs[0], a}); };
        if (name == "h") {
            one(GateKind::H);
        } else if (name == "x") {
            one(GateKind::X);
        } else if (name == "t") {
            one(GateKind::Rz, Angle::t());
        } else if (name == "tdg") {
            one(GateKind::Rz, Angle::tdg());
        } else if (name == "s") {
            one(GateKind::Rz, Angle::s());
        } else if (name == "sdg") {
            one(GateKind::Rz, Angle::sdg());
        } else if (name == "z") {
            one(GateKind::Rz, Angle::z());
        } else if (name == "rz") {
            one(GateKind::Rz, angle);
        } else if (name == "cx") {
            gates_.push_back({GateKind::CX, qs[0], qs[1], Angle()});
        } else {
            lower_ccx(qs[0], qs[1], qs[2]);
        }
    }

    void lower_ccx(uint32_t a, uint32_t b, uint32_t c) {
        auto h = [&](uint32_t q) { gates_.push_back({GateKind::H, q, q, Angle()}); };
        auto cx = [&](uint32_t ctl, uint32_t tgt) { gates_.push_back({GateKind::CX, ctl, tgt, Angle()}); };
        auto rz = [&](Angle ang, uint32_t q) { gates_.push_back({GateKind::Rz, q, q, ang}); };
        h(c);
        cx(b, c);
        rz(Angle::tdg(), c);
        cx(a, c);
        rz(Angle::t(), c);
        cx(b, c);
        rz(Angle::tdg(), c);
        cx(a, c);
        rz(Angle::t(), b);
        rz(Angle::t(), c);
        h(c);
        cx(a, b);
        rz(Angle::t(), a);
        rz(Angle::tdg(), b);
        cx(a, b);
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    ParseOptions options_;
    std::map<std::string, Register, std::less<>> registers_;
    uint32_t total_qubits_ = 0;
    std::vector<PendingGate> gates_;
};

}  // namespace

const char *diagnostic_kind_name(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::UnsupportedGate:
            return "UnsupportedGate";
        case DiagnosticKind::SyntaxError:
            return "SyntaxError";
        case DiagnosticKind::UndeclaredQubit:
            return "UndeclaredQubit";
        case DiagnosticKind::BadAngle:
            return "BadAngle";
    }
    return "?";
}

std::string ParseDiagnostic::str() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + diagnostic_kind_name(kind) + ": " + message;
}

ParseResult parse_qasm(std::string_view source, const ParseOptions &options) {
    std::vector<Token> tokens;
    ParseDiagnostic lex_error;
    if (!Lexer(source).tokenize(tokens, lex_error)) {
        ParseResult r;
        r.diagnostics.push_back(lex_error);
        return r;
    }
    return Parser(std::move(tokens), options).run();
}

std::string emit_qasm(const Circuit &c) {
    std::string out;
    out.reserve(32 + c.size() * 16);
    out += "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[" + std::to_string(c.num_qubits()) + "];\n";
    auto q = [](QubitId id) { return "q[" + std::to_string(id.index) + "]"; };
    for (const Gate &g : c) {
        switch (g.kind()) {
            case GateKind::H:
                out += "h " + q(g.qubit()) + ";\n";
                break;
            case GateKind::X:
                out += "x " + q(g.qubit()) + ";\n";
                break;
            case GateKind::CX:
                out += "cx " + q(g.control()) + ", " + q(g.target()) + ";\n";
                break;
            case GateKind::Rz: {
                const Angle &a = g.angle();
                const char *named = nullptr;
                if (a == Angle::t()) {
                    named = "t";
                } else if (a == Angle::tdg()) {
                    named = "tdg";
                } else if (a == Angle::s()) {
                    named = "s";
                } else if (a == Angle::sdg()) {
                    named = "sdg";
                } else if (a == Angle::z()) {
                    named = "z";
                }
                if (named != nullptr) {
                    out += std::string(named) + " " + q(g.qubit()) + ";\n";
                } else {
                    out += "rz(" + a.str() + ") " + q(g.qubit()) + ";\n";
                }
                break;
            }
        }
    }
    return out;
}

}  // namespace phasefold
