// Self-describing operator documents: the text format the CLI ingests
// and the gallery emits. Matrices travel as parallel real/imaginary 2-D
// arrays; representations as term lists. JSON carrier, numbers
// round-trip exactly.

#pragma once

#include "specsym/core.hpp"
#include "specsym/traces.hpp"

#include <optional>
#include <string>

namespace specsym {

enum class DocumentKind { matrix, representation };

struct ExpectedVerdict {
    int d = 2;
    int K = 0;
    bool symmetric = false;
};

struct OperatorDocument {
    DocumentKind kind = DocumentKind::matrix;
    Eigen::Index dim = 1;
    std::optional<std::string> name;
    std::optional<ExpectedVerdict> expected;

    // matrix kind
    std::optional<DenseOperator> matrix;
    // representation kind
    std::optional<NuclearRepresentation> representation;

    // The operator the document denotes, whichever kind it is.
    DenseOperator to_operator() const;
};

// Thrown on malformed documents; the message carries field context.
class DocumentParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

OperatorDocument parse_document(const std::string& text);
OperatorDocument load_document(const std::string& path);

std::string serialize_document(const OperatorDocument& doc);
void save_document(const OperatorDocument& doc, const std::string& path);

OperatorDocument document_from_matrix(const DenseOperator& op,
                                      std::optional<std::string> name = {},
                                      std::optional<ExpectedVerdict> expected = {});
OperatorDocument document_from_representation(const NuclearRepresentation& rep,
                                              std::optional<std::string> name = {},
                                              std::optional<ExpectedVerdict> expected = {});

}  // namespace specsym
