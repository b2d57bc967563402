#include "panekit/input_state.hpp"

#include "panekit/error.hpp"

#include <array>
#include <utility>

namespace panekit {

namespace {

constexpr std::array<std::pair<Edge, std::string_view>, 8> kEdgeNames{{
    {Edge::Left, "left"},
    {Edge::Right, "right"},
    {Edge::Top, "top"},
    {Edge::Bottom, "bottom"},
    {Edge::TopLeft, "top_left"},
    {Edge::TopRight, "top_right"},
    {Edge::BottomLeft, "bottom_left"},
    {Edge::BottomRight, "bottom_right"},
}};

} // namespace

std::string_view to_string(Edge edge) noexcept {
    for (const auto& [e, name] : kEdgeNames) {
        if (e == edge) {
            return name;
        }
    }
    return "?";
}

Edge edge_from_string(std::string_view name) {
    for (const auto& [e, n] : kEdgeNames) {
        if (n == name) {
            return e;
        }
    }
    throw Error(ErrorCode::BadConfig, "unknown edge '" + std::string(name) + "'");
}

PointerSampleQueue::PointerSampleQueue(LassoConfig config) : config_(config) {
    if (!config_.valid()) {
        throw Error(ErrorCode::BadConfig, "lasso config requires n_max >= 4, t_lasso > 0, proximity_d > 0");
    }
}

void PointerSampleQueue::push(PointerSample sample) {
    if (last_t_ && sample.t < *last_t_) {
        throw Error(ErrorCode::NonMonotonicTime, "pointer sample time went backwards");
    }
    last_t_ = sample.t;
    samples_.push_back(sample);
    while (samples_.size() > config_.n_max) {
        samples_.pop_front();
    }
    while (sample.t - samples_.front().t > config_.t_lasso) {
        samples_.pop_front();
    }
}

} // namespace panekit
