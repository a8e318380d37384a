#ifndef GRAPHSUM_SRC_EMBEDDED_DATA_HPP_
#define GRAPHSUM_SRC_EMBEDDED_DATA_HPP_

#include <string_view>

namespace graphsum::embedded {

// Contents of data/stopwords.txt and data/lemmas.tsv at build time.
extern const std::string_view kStopWords;
extern const std::string_view kLemmaTable;

}  // namespace graphsum::embedded

#endif  // GRAPHSUM_SRC_EMBEDDED_DATA_HPP_
