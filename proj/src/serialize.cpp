#include "arithmon/serialize.hpp"

namespace arithmon {

nlohmann::json to_json(const CongruenceClass& c) {
    return {{"mod", c.modulus().str()}, {"res", c.residue().str()}};
}

nlohmann::json to_json(const ArithElement& e) {
    if (e.is_zero()) return {{"zero", true}};
    return {{"dom", to_json(e.dom())}, {"img", to_json(e.img())}};
}

nlohmann::json to_json(const Rational& q) {
    return {{"num", q.num().str()}, {"den", q.den().str()}};
}

namespace {

Natural field(const nlohmann::json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_string())
        throw std::invalid_argument(std::string("expected a decimal-string \"") +
                                    name + "\" field");
    return Natural::parse(j[name].get<std::string>());
}

}  // namespace

CongruenceClass class_from_json(const nlohmann::json& j) {
    return CongruenceClass(field(j, "mod"), field(j, "res"));
}

ArithElement arith_from_json(const nlohmann::json& j) {
    if (j.contains("zero")) {
        if (j["zero"] != true)
            throw std::invalid_argument("\"zero\" field must be true");
        return ArithElement::zero();
    }
    if (!j.contains("dom") || !j.contains("img"))
        throw std::invalid_argument("expected \"dom\" and \"img\" fields");
    return ArithElement::normal_form(class_from_json(j["dom"]),
                                     class_from_json(j["img"]));
}

}  // namespace arithmon
