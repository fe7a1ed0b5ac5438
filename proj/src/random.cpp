#include "hrcqea/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace hrcqea {

std::size_t UniformSource::index(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("index: empty range");
    auto i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return std::min(i, n - 1);
}

double ScriptedRng::uniform()
{
    if (draws_.empty())
        throw std::logic_error("ScriptedRng: no draws scripted");
    double r = draws_[consumed_ % draws_.size()];
    ++consumed_;
    return r;
}

} // namespace hrcqea
