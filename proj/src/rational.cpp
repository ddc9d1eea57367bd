#include "adshiggs/rational.hpp"

namespace adshiggs {

std::string GaussQ::str() const {
    if (im == 0) return re.get_str();
    if (re == 0) return im.get_str() + "i";
    std::string s = re.get_str();
    if (im > 0) s += "+";
    return s + im.get_str() + "i";
}

}  // namespace adshiggs
