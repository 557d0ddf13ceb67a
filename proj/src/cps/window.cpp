#include "meyerlab/cps/window.hpp"

#include "meyerlab/errors.hpp"
#include "meyerlab/exactnum/padic.hpp"

#include <algorithm>
#include <sstream>

namespace meyerlab::cps {

void Window::validate() const {
    for (const auto& c : real_boxes)
        if (c <= 0) throw UsageError("window half-widths must be > 0");
    for (std::size_t i = 0; i < padic_balls.size(); ++i) {
        if (!is_prime(padic_balls[i].prime)) throw UsageError("window prime " + padic_balls[i].prime.get_str() + " is not prime");
        for (std::size_t j = 0; j < i; ++j)
            if (padic_balls[j].prime == padic_balls[i].prime) throw UsageError("window lists a prime twice");
    }
}

namespace {

void require_same_shape(const Window& a, const Window& b) {
    if (a.real_boxes.size() != b.real_boxes.size() || a.padic_balls.size() != b.padic_balls.size())
        throw UsageError("window shape mismatch");
    for (std::size_t i = 0; i < a.padic_balls.size(); ++i)
        if (a.padic_balls[i].prime != b.padic_balls[i].prime) throw UsageError("window shape mismatch (primes differ)");
}

}  // namespace

bool Window::subset_of(const Window& other) const {
    require_same_shape(*this, other);
    for (std::size_t i = 0; i < real_boxes.size(); ++i)
        if (real_boxes[i] > other.real_boxes[i]) return false;
    for (std::size_t i = 0; i < padic_balls.size(); ++i)
        if (padic_balls[i].level > other.padic_balls[i].level) return false;
    return true;
}

std::string Window::describe() const {
    std::ostringstream os;
    if (!real_boxes.empty()) {
        os << "box:";
        for (std::size_t i = 0; i < real_boxes.size(); ++i) os << (i ? "," : "") << real_boxes[i].get_str();
    }
    if (!padic_balls.empty()) {
        if (!real_boxes.empty()) os << ";";
        for (std::size_t i = 0; i < padic_balls.size(); ++i)
            os << (i ? "," : "") << "z" << padic_balls[i].prime.get_str() << ":" << padic_balls[i].level;
    }
    return os.str();
}

Window window_product(const Window& a, const Window& b) {
    require_same_shape(a, b);
    Window w;
    for (std::size_t i = 0; i < a.real_boxes.size(); ++i) w.real_boxes.push_back(a.real_boxes[i] + b.real_boxes[i]);
    for (std::size_t i = 0; i < a.padic_balls.size(); ++i)
        w.padic_balls.push_back({a.padic_balls[i].prime, std::max(a.padic_balls[i].level, b.padic_balls[i].level)});
    return w;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

}  // namespace

Window parse_window(const std::string& text) {
    Window w;
    for (const auto& part : split(text, ';')) {
        if (part.rfind("box:", 0) == 0) {
            for (const auto& c : split(part.substr(4), ',')) w.real_boxes.push_back(parse_rational(c));
            continue;
        }
        for (const auto& ball : split(part, ',')) {
            auto colon = ball.find(':');
            if (ball.size() < 2 || ball[0] != 'z' || colon == std::string::npos)
                throw UsageError("malformed window component '" + ball + "' (expected box:c,... or zP:k)");
            try {
                w.padic_balls.push_back({Integer(ball.substr(1, colon - 1)), std::stol(ball.substr(colon + 1))});
            } catch (const std::exception&) {
                throw UsageError("malformed window component '" + ball + "'");
            }
        }
    }
    if (w.real_boxes.empty() && w.padic_balls.empty()) throw UsageError("empty window '" + text + "'");
    w.validate();
    return w;
}

}  // namespace meyerlab::cps
