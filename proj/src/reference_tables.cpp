#include "ghzdist/reference_tables.hpp"

#include <algorithm>
#include <array>

namespace ghzdist {

namespace {

using sv = std::string_view;

constexpr std::array<uint32_t, 5> kMs = {2, 3, 4, 5, 6};
constexpr std::array<uint32_t, 10> kNsLong = {2, 3, 4, 5, 6, 7, 11, 15, 21, 31};
constexpr std::array<uint32_t, 8> kNsShort = {2, 3, 4, 5, 6, 7, 11, 15};

constexpr std::array<sv, 50> kSsQ2 = {
    "0.8113", "0.8109", "0.8103", "0.8115", "0.8142",
    "0.8099", "0.7870", "0.7699", "0.7593", "0.7536",
    "0.8102", "0.7753", "0.7486", "0.7301", "0.7184",
    "0.8097", "0.7675", "0.7351", "0.7118", "0.6961",
    "0.8100", "0.7622", "0.7256", "0.6992", "0.6808",
    "0.8098", "0.7582", "0.7185", "0.6898", "0.6696",
    "0.8104", "0.7492", "0.7021", "0.6677", "0.6435",
    "0.8110", "0.7449", "0.6938", "0.6565", "0.6301",
    "0.8118", "0.7416", "0.6870", "0.6471", "0.6188",
    "0.8128", "0.7391", "0.6814", "0.6390", "0.6089",
};

constexpr std::array<sv, 40> kMsQ2 = {
    "0.8137", "0.7788", "0.7541", "0.7369", "0.7253",
    "0.8101", "0.7631", "0.7261", "0.6991", "0.6781",
    "0.8102", "0.7551", "0.7091", "0.6781", "0.6571",
    "0.8095", "0.7566", "0.7111", "0.6771", "0.6521",
    "0.8100", "0.7522", "0.7081", "0.6721", "0.6421",
    "0.8098", "0.7501", "0.7051", "0.6711", "0.6441",
    "0.8104", "0.7475", "0.6951", "0.6581", "0.6311",
    "0.8110", "0.7446", "0.6901", "0.6511", "0.6221",
};

constexpr std::array<sv, 40> kClQ2 = {
    "0.8137", "0.7084", "0.6655", "0.6378", "0.6204",
    "0.8101", "0.7122", "0.6793", "0.6584", "0.6501",
    "0.8102", "0.7165", "0.6906", "0.6680", "0.6532",
    "0.8095", "0.7111", "0.6776", "0.6582", "0.6357",
    "0.8100", "0.7099", "0.6684", "0.6551", "0.6217",
    "0.8098", "0.7086", "0.6650", "0.6480", "0.6133",
    "0.8104", "0.7081", "0.6642", "0.6372", "0.6062",
    "0.8110", "0.7074", "0.6601", "0.6284", "0.6036",
};

constexpr std::array<sv, 40> kSsQ3 = {
    "0.7462", "0.7538", "0.7609", "0.7693", "0.7778",
    "0.7445", "0.7243", "0.7145", "0.7127", "0.7148",
    "0.7445", "0.7089", "0.6885", "0.6799", "0.6779",
    "0.7442", "0.6994", "0.6722", "0.6588", "0.6539",
    "0.7441", "0.6927", "0.6611", "0.6443", "0.6370",
    "0.7441", "0.6877", "0.6530", "0.6337", "0.6246",
    "0.7444", "0.6759", "0.6338", "0.6096", "0.5962",
    "0.7449", "0.6700", "0.6238", "0.5974", "0.5823",
};

constexpr std::array<sv, 40> kMsQ3 = {
    "0.7499", "0.7114", "0.6892", "0.6780", "0.6728",
    "0.7450", "0.7034", "0.6776", "0.6640", "0.6575",
    "0.7448", "0.6944", "0.6591", "0.6389", "0.6289",
    "0.7444", "0.6849", "0.6452", "0.6234", "0.6127",
    "0.7443", "0.6829", "0.6418", "0.6172", "0.6041",
    "0.7443", "0.6810", "0.6390", "0.6121", "0.5967",
    "0.7446", "0.6738", "0.6289", "0.5997", "0.5808",
    "0.7451", "0.6692", "0.6212", "0.5927", "0.5740",
};

constexpr std::array<sv, 40> kClQ3 = {
    "0.7499", "0.6419", "0.6120", "0.5981", "0.5921",
    "0.7450", "0.6222", "0.5908", "0.5762", "0.5697",
    "0.7448", "0.6282", "0.6016", "0.5821", "0.5868",
    "0.7444", "0.6337", "0.6104", "0.5916", "0.5895",
    "0.7443", "0.6334", "0.6061", "0.5896", "0.5855",
    "0.7443", "0.6304", "0.6023", "0.5877", "0.5829",
    "0.7446", "0.6249", "0.5910", "0.5790", "0.5670",
    "0.7451", "0.6235", "0.5865", "0.5701", "0.5560",
};

const std::array<ReferenceGrid, 6> kGrids = {{
    {"ss-q2", Protocol::kSS, 2, kNsLong, kMs, kSsQ2},
    {"ms-q2", Protocol::kMS, 2, kNsShort, kMs, kMsQ2},
    {"cl-q2", Protocol::kCL, 2, kNsShort, kMs, kClQ2},
    {"ss-q3", Protocol::kSS, 3, kNsShort, kMs, kSsQ3},
    {"ms-q3", Protocol::kMS, 3, kNsShort, kMs, kMsQ3},
    {"cl-q3", Protocol::kCL, 3, kNsShort, kMs, kClQ3},
}};

constexpr std::array<ReferenceBound, 3> kBounds = {{
    {2, "0.7500"},
    {3, "0.6111"},
    {4, "0.5500"},
}};

}  // namespace

std::string_view ReferenceGrid::value(uint32_t m, uint32_t n) const {
    const auto mit = std::find(ms.begin(), ms.end(), m);
    const auto nit = std::find(ns.begin(), ns.end(), n);
    if (mit == ms.end() || nit == ns.end()) return {};
    const size_t row = static_cast<size_t>(nit - ns.begin());
    const size_t col = static_cast<size_t>(mit - ms.begin());
    return values[row * ms.size() + col];
}

std::span<const ReferenceGrid> reference_grids() { return kGrids; }

const ReferenceGrid* reference_grid(std::string_view id) {
    for (const ReferenceGrid& grid : kGrids)
        if (grid.id == id) return &grid;
    return nullptr;
}

std::span<const ReferenceBound> reference_bounds() { return kBounds; }

}  // namespace ghzdist
