#include "photonbox/errors.hpp"

#include <sstream>

namespace photonbox {

namespace {
std::string cutoff_message(double cutoff, std::size_t predicted, std::size_t budget)
{
    std::ostringstream os;
    os << "cutoff " << cutoff << " needs about " << predicted
       << " modes, budget is " << budget;
    return os.str();
}
}  // namespace

CutoffTooLarge::CutoffTooLarge(double cutoff, std::size_t predicted, std::size_t budget)
    : std::runtime_error(cutoff_message(cutoff, predicted, budget))
    , cutoff_{cutoff}
    , predicted_{predicted}
    , budget_{budget}
{
}

}  // namespace photonbox
