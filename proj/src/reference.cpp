#include "qws/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace qws {

namespace {

const TuningRow kTuning[] = {
    {3, 32, 2, 0.9507, 59, 0.0942, 3.551, 0.9258, -0.7143, 3.346},
    {3, 32, 3, 0.7015, 55, 0.1001, 3.299, 0.6737, -0.7618, 3.136},
    {3, 32, 4, 0.5363, 55, 0.1016, 3.202, 0.5194, -0.7748, 3.089},
    {3, 32, 8, 0.2755, 54, 0.1027, 3.158, 0.2665, -0.7860, 3.052},
    {3, 32, 20, 0.1114, 54, 0.1030, 3.157, 0.1074, -0.7890, 3.044},
    {4, 16, 2, 0.9541, 54, 0.0528, 3.583, 0.9428, -0.7778, 3.482},
    {4, 16, 3, 0.6986, 54, 0.0548, 3.281, 0.6827, -0.8190, 3.188},
    {4, 16, 4, 0.5411, 53, 0.0553, 3.234, 0.5257, -0.8300, 3.131},
    {4, 16, 8, 0.2771, 52, 0.0558, 3.177, 0.2694, -0.8395, 3.086},
    {4, 16, 20, 0.1115, 52, 0.0559, 3.160, 0.1084, -0.8420, 3.072},
    {5, 16, 2, 0.9500, 150, 0.0276, 3.545, 0.9535, -0.8182, 3.577},
    {5, 16, 3, 0.6920, 148, 0.0284, 3.242, 0.6880, -0.8541, 3.219},
    {5, 16, 4, 0.5376, 147, 0.0286, 3.211, 0.5292, -0.8636, 3.155},
    {5, 16, 8, 0.2726, 147, 0.0288, 3.124, 0.2710, -0.8718, 3.105},
    {5, 16, 20, 0.1108, 147, 0.0288, 3.140, 0.1092, -0.8739, 3.095},
    {6, 8, 3, 0.6891, 51, 0.0145, 3.225, 0.6913, -0.8778, 3.238},
    {6, 8, 20, 0.1106, 51, 0.0147, 3.135, 0.1094, -0.8951, 3.101},
    {7, 8, 3, 0.6932, 102, 0.0073, 3.250, 0.6937, -0.8949, 3.252},
    {7, 8, 20, 0.1097, 102, 0.0074, 3.109, 0.1098, -0.9102, 3.112},
};

}  // namespace

std::span<const TuningRow> reference_tuning() { return kTuning; }

const std::vector<FiniteSizeRow>& reference_finite_size() {
  static const std::vector<FiniteSizeRow> rows = {
      {2, 3, {64, 128, 256, 512}, 0.0911, 0.0964, 2.43e-5, 0.3237, 0.1440, 4.57e-4, 1.072},
      {2, 4, {16, 32, 48, 64}, 0.0522, 0.0100, 3.02e-5, 0.2167, -0.0832, 1.05e-3, 0.948},
      {2, 5, {12, 16, 24, 32}, 0.0275, 0.0009, 1.70e-6, 0.1486, -0.0243, 2.39e-4, 0.896},
      {2, 6, {12, 14, 16, 18}, 0.0141, 0.0001, 2.31e-7, 0.1043, -0.0208, 1.78e-4, 0.878},
      {2, 7, {6, 8, 10}, 0.0072, -0.0004, 1.40e-6, 0.0757, -0.0338, 2.47e-4, 0.892},
      {2, 8, {6, 8}, 0.0036, std::nullopt, 3.50e-6, 0.0509, std::nullopt, 7.23e-5, 0.848},
      {2, 9, {6}, 0.0018, std::nullopt, std::nullopt, 0.0356, std::nullopt, std::nullopt, 0.839},
      {3, 3, {64, 128, 256, 512}, 0.0968, 0.0920, 2.73e-6, 0.3141, -0.0306, 1.23e-3, 1.010},
      {3, 4, {16, 32, 48, 64}, 0.0542, 0.0076, 1.46e-5, 0.2097, 0.0151, 6.71e-4, 0.901},
      {3, 5, {12, 16, 24, 32}, 0.0283, 0.0010, 4.66e-6, 0.1470, -0.0300, 2.12e-4, 0.874},
      {3, 6, {12, 14, 16, 18}, 0.0145, 0.0001, 5.79e-7, 0.1035, -0.0269, 1.88e-4, 0.860},
      {3, 7, {6, 8, 10}, 0.0074, -0.0003, 1.46e-6, 0.0750, -0.0296, 3.39e-4, 0.872},
      {3, 8, {6, 8}, 0.0037, std::nullopt, 3.00e-6, 0.0498, std::nullopt, 4.55e-5, 0.819},
      {3, 9, {6}, 0.0019, std::nullopt, std::nullopt, 0.0353, std::nullopt, std::nullopt, 0.810},
      {4, 3, {64, 128, 256, 512}, 0.0984, 0.0936, 1.84e-5, 0.3123, -0.1239, 8.46e-4, 0.996},
      {4, 4, {16, 32, 48, 64}, 0.0548, 0.0087, 2.24e-5, 0.2103, -0.0500, 3.57e-4, 0.898},
      {4, 5, {12, 16, 24, 32}, 0.0285, 0.0013, 8.05e-6, 0.1455, -0.0142, 2.25e-4, 0.862},
      {4, 6, {12, 14, 16, 18}, 0.0146, 0.0002, 7.67e-7, 0.1015, 0.0043, 6.28e-5, 0.840},
      {4, 7, {6, 8, 10}, 0.0074, -0.0003, 2.86e-6, 0.0733, -0.0194, 2.01e-4, 0.852},
      {4, 8, {6, 8}, 0.0037, std::nullopt, 4.50e-6, 0.0505, std::nullopt, 4.39e-4, 0.830},
      {4, 9, {6}, 0.0019, std::nullopt, std::nullopt, 0.0353, std::nullopt, std::nullopt, 0.810},
  };
  return rows;
}

double reference_scaling_s(int t1) {
  switch (t1) {
    case 2:
      return 0.9539;
    case 3:
      return 1.0 / std::sqrt(2.0);
    case 4:
      return 0.5410;
    default:
      throw std::invalid_argument("reference_scaling_s: t1 must be 2, 3 or 4");
  }
}

const std::vector<DimensionFitRow>& reference_dimension_fits() {
  static const std::vector<DimensionFitRow> rows = {
      {2, -0.553, -0.938, -0.085, -0.526, 0.721, 0.995},
      {3, -0.458, -0.947, -0.138, -0.521, 0.729, 0.791},
      {4, -0.421, -0.951, -0.151, -0.521, 0.725, 0.761},
  };
  return rows;
}

const std::vector<FixedLRow>& reference_fixed_L() {
  static const std::vector<FixedLRow> rows = {
      {2, 6, {5, 6, 7, 8, 9}, 0.766, 0.551},
      {2, 8, {4, 5, 6, 7, 8}, 0.805, 0.293},
      {2, 16, {3, 4, 5, 6}, 0.663, 1.132},
      {2, 32, {3, 4, 5}, 0.625, 1.304},
      {3, 6, {4, 5, 6, 7, 8, 9}, 0.819, 0.006},
      {3, 8, {4, 5, 6, 7, 8}, 0.803, 0.234},
      {3, 16, {3, 4, 5, 6}, 0.773, 0.471},
      {3, 32, {3, 4, 5}, 0.724, 0.705},
      {4, 6, {4, 5, 6, 7, 8, 9}, 0.837, -0.092},
      {4, 8, {4, 5, 6, 7, 8}, 0.791, 0.272},
      {4, 16, {3, 4, 5, 6}, 0.767, 0.450},
      {4, 32, {3, 4, 5}, 0.711, 0.726},
  };
  return rows;
}

const std::vector<MultiVertexRow>& reference_multi_vertex() {
  static const std::vector<MultiVertexRow> rows = {
      {"single", {{32, 32, 32}}, {0.09829}, {161}},
      {"pair, same corner",
       {{0, 32, 32}, {32, 32, 32}},
       {0.04919, 0.04919},
       {112, 112}},
      {"pair, different corners",
       {{0, 32, 33}, {32, 32, 32}},
       {0.09868, 0.09790},
       {161, 161}},
      {"triple, same corner",
       {{0, 0, 0}, {16, 16, 16}, {32, 32, 32}},
       {0.03530, 0.03264, 0.03082},
       {94, 92, 92}},
      {"triple, mixed corners",
       {{0, 0, 1}, {16, 16, 16}, {32, 32, 32}},
       {0.09380, 0.05590, 0.04507},
       {161, 117, 109}},
      {"triple, different corners",
       {{0, 0, 1}, {16, 16, 16}, {33, 32, 32}},
       {0.09298, 0.09838, 0.10347},
       {157, 161, 162}},
  };
  return rows;
}

}  // namespace qws
