#include "specsym/document.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

namespace specsym {

namespace {

using json = nlohmann::ordered_json;

double parse_exponent(const json& j, const std::string& field) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInf;
        throw DocumentParseError("field '" + field + "': expected a number or \"inf\"");
    }
    if (!j.is_number())
        throw DocumentParseError("field '" + field + "': expected a number or \"inf\"");
    return j.get<double>();
}

json exponent_to_json(double p) {
    if (std::isinf(p)) return json("inf");
    return json(p);
}

const json& require(const json& j, const std::string& field) {
    auto it = j.find(field);
    if (it == j.end())
        throw DocumentParseError("missing field '" + field + "'");
    return *it;
}

Eigen::MatrixXd parse_real_matrix(const json& j, Eigen::Index dim,
                                  const std::string& field) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != dim)
        throw DocumentParseError("field '" + field + "': expected " +
                                 std::to_string(dim) + " rows");
    Eigen::MatrixXd m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
            throw DocumentParseError("field '" + field + "', row " + std::to_string(i) +
                                     ": expected " + std::to_string(dim) + " entries");
        for (Eigen::Index k = 0; k < dim; ++k) {
            const json& cell = row[static_cast<std::size_t>(k)];
            if (!cell.is_number())
                throw DocumentParseError("field '" + field + "', row " +
                                         std::to_string(i) + ", column " +
                                         std::to_string(k) + ": expected a number");
            m(i, k) = cell.get<double>();
        }
    }
    return m;
}

Eigen::VectorXcd parse_complex_vector(const json& j, Eigen::Index dim,
                                      const std::string& field) {
    const json& re = require(j, "re");
    const json& im = require(j, "im");
    if (!re.is_array() || !im.is_array() ||
        static_cast<Eigen::Index>(re.size()) != dim ||
        static_cast<Eigen::Index>(im.size()) != dim)
        throw DocumentParseError("field '" + field +
                                 "': re/im arrays must have length " +
                                 std::to_string(dim));
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const json& r = re[static_cast<std::size_t>(i)];
        const json& m = im[static_cast<std::size_t>(i)];
        if (!r.is_number() || !m.is_number())
            throw DocumentParseError("field '" + field + "', entry " +
                                     std::to_string(i) + ": expected numbers");
        v[i] = Complex(r.get<double>(), m.get<double>());
    }
    return v;
}

json complex_vector_to_json(const Eigen::VectorXcd& v) {
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        re.push_back(v[i].real());
        im.push_back(v[i].imag());
    }
    return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

}  // namespace

DenseOperator OperatorDocument::to_operator() const {
    if (kind == DocumentKind::matrix) {
        if (!matrix) throw std::logic_error("matrix document without a matrix");
        return *matrix;
    }
    if (!representation)
        throw std::logic_error("representation document without terms");
    return induced_operator(*representation);
}

OperatorDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw DocumentParseError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw DocumentParseError("document must be a JSON object");

    OperatorDocument doc;
    const std::string kind = require(j, "kind").get<std::string>();
    const json& jdim = require(j, "dim");
    if (!jdim.is_number_integer() || jdim.get<long>() < 1)
        throw DocumentParseError("field 'dim': expected a positive integer");
    doc.dim = jdim.get<Eigen::Index>();

    if (auto it = j.find("name"); it != j.end()) doc.name = it->get<std::string>();
    if (auto it = j.find("expected"); it != j.end()) {
        ExpectedVerdict ev;
        ev.d = require(*it, "d").get<int>();
        if (auto k = it->find("K"); k != it->end()) ev.K = k->get<int>();
        const std::string verdict = require(*it, "verdict").get<std::string>();
        if (verdict != "symmetric" && verdict != "asymmetric")
            throw DocumentParseError(
                "field 'expected.verdict': must be 'symmetric' or 'asymmetric'");
        ev.symmetric = (verdict == "symmetric");
        doc.expected = ev;
    }

    if (kind == "matrix") {
        doc.kind = DocumentKind::matrix;
        const Eigen::MatrixXd re = parse_real_matrix(require(j, "re"), doc.dim, "re");
        const Eigen::MatrixXd im = parse_real_matrix(require(j, "im"), doc.dim, "im");
        Eigen::MatrixXcd m = re.cast<Complex>() + Complex(0.0, 1.0) * im.cast<Complex>();
        try {
            doc.matrix = DenseOperator(std::move(m));
        } catch (const std::invalid_argument& e) {
            throw DocumentParseError(e.what());
        }
    } else if (kind == "representation") {
        doc.kind = DocumentKind::representation;
        const double ambient_p = parse_exponent(require(j, "ambient_p"), "ambient_p");
        const json& jterms = require(j, "terms");
        if (!jterms.is_array())
            throw DocumentParseError("field 'terms': expected an array");
        std::vector<NuclearTerm> terms;
        terms.reserve(jterms.size());
        for (std::size_t k = 0; k < jterms.size(); ++k) {
            const json& jt = jterms[k];
            const std::string ctx = "terms[" + std::to_string(k) + "]";
            const json& jmu = require(jt, "mu");
            if (!jmu.is_array() || jmu.size() != 2 || !jmu[0].is_number() ||
                !jmu[1].is_number())
                throw DocumentParseError("field '" + ctx +
                                         ".mu': expected a [re, im] pair");
            NuclearTerm term;
            term.mu = Complex(jmu[0].get<double>(), jmu[1].get<double>());
            term.functional =
                parse_complex_vector(require(jt, "functional"), doc.dim, ctx + ".functional");
            term.vec = parse_complex_vector(require(jt, "vector"), doc.dim, ctx + ".vector");
            terms.push_back(std::move(term));
        }
        try {
            doc.representation =
                NuclearRepresentation(ambient_p, doc.dim, std::move(terms));
        } catch (const std::invalid_argument& e) {
            throw DocumentParseError(e.what());
        }
    } else {
        throw DocumentParseError("field 'kind': must be 'matrix' or 'representation'");
    }
    return doc;
}

OperatorDocument load_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DocumentParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_document(buf.str());
    } catch (const DocumentParseError& e) {
        throw DocumentParseError(path + ": " + e.what());
    }
}

std::string serialize_document(const OperatorDocument& doc) {
    json j;
    j["kind"] = (doc.kind == DocumentKind::matrix) ? "matrix" : "representation";
    if (doc.name) j["name"] = *doc.name;
    j["dim"] = doc.dim;
    if (doc.kind == DocumentKind::matrix) {
        json re = json::array(), im = json::array();
        const auto& m = doc.matrix->mat();
        for (Eigen::Index i = 0; i < doc.dim; ++i) {
            json row_re = json::array(), row_im = json::array();
            for (Eigen::Index k = 0; k < doc.dim; ++k) {
                row_re.push_back(m(i, k).real());
                row_im.push_back(m(i, k).imag());
            }
            re.push_back(std::move(row_re));
            im.push_back(std::move(row_im));
        }
        j["re"] = std::move(re);
        j["im"] = std::move(im);
    } else {
        j["ambient_p"] = exponent_to_json(doc.representation->ambient_p());
        json terms = json::array();
        for (const auto& t : doc.representation->terms()) {
            json jt;
            jt["mu"] = json::array({t.mu.real(), t.mu.imag()});
            jt["functional"] = complex_vector_to_json(t.functional);
            jt["vector"] = complex_vector_to_json(t.vec);
            terms.push_back(std::move(jt));
        }
        j["terms"] = std::move(terms);
    }
    if (doc.expected) {
        j["expected"] = json{{"d", doc.expected->d},
                             {"K", doc.expected->K},
                             {"verdict", doc.expected->symmetric ? "symmetric"
                                                                 : "asymmetric"}};
    }
    return j.dump(2) + "\n";
}

void save_document(const OperatorDocument& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << serialize_document(doc);
}

OperatorDocument document_from_matrix(const DenseOperator& op,
                                      std::optional<std::string> name,
                                      std::optional<ExpectedVerdict> expected) {
    OperatorDocument doc;
    doc.kind = DocumentKind::matrix;
    doc.dim = op.dim();
    doc.matrix = op;
    doc.name = std::move(name);
    doc.expected = expected;
    return doc;
}

OperatorDocument document_from_representation(const NuclearRepresentation& rep,
                                              std::optional<std::string> name,
                                              std::optional<ExpectedVerdict> expected) {
    OperatorDocument doc;
    doc.kind = DocumentKind::representation;
    doc.dim = rep.dim();
    doc.representation = rep;
    doc.name = std::move(name);
    doc.expected = expected;
    return doc;
}

}  // namespace specsym
