#pragma once

// Shared benchmark datasets and their reference scores. The hospital data
// (two inputs, two outputs, 12 units) is a classic DEA benchmark; the
// interval and single-input/single-output sets exercise the interval and
// variable-returns-to-scale paths. Reference scores are frozen to the
// precision they are conventionally quoted at.

#include <vector>

#include "robdea/data.hpp"

namespace fixtures {

inline robdea::Dataset hospitals() {
    return robdea::Dataset({
        {"A", {20, 151}, {100, 90}},
        {"B", {19, 131}, {150, 50}},
        {"C", {25, 160}, {160, 55}},
        {"D", {27, 168}, {180, 72}},
        {"E", {22, 158}, {94, 66}},
        {"F", {55, 255}, {230, 90}},
        {"G", {33, 235}, {220, 88}},
        {"H", {31, 206}, {152, 80}},
        {"I", {30, 244}, {190, 100}},
        {"J", {50, 268}, {250, 100}},
        {"K", {53, 306}, {260, 147}},
        {"L", {38, 284}, {250, 120}},
    });
}

// Reference scores for the hospital set, rounded to four decimals.
inline const std::vector<double> kHospitalClassical = {
    1.0, 1.0, 0.8827, 1.0, 0.7635, 0.8348, 0.9020, 0.7963, 0.9604, 0.8707, 0.9551, 0.9582};
inline const std::vector<double> kHospitalRobustLp = {
    1.1696, 1.0843, 0.9377, 1.0079, 0.8659, 0.9100, 0.9485, 0.8866, 0.9798, 0.9309, 0.9770,
    0.9787};
inline const std::vector<double> kHospitalRobustExact = {
    1.1708, 1.0845, 0.9376, 1.0079, 0.8653, 0.9097, 0.9484, 0.8863, 0.9798, 0.9307, 0.9770,
    0.9787};

// Three units with one constant input and two outputs; B sits exactly on
// the segment between A and C.
inline robdea::Dataset abc_outputs() {
    return robdea::Dataset({
        {"A", {1}, {2, 4}},
        {"B", {1}, {3, 3}},
        {"C", {1}, {4, 2}},
    });
}

// One constant input, two interval outputs, ten units.
inline robdea::IntervalDataset interval_outputs() {
    robdea::Dataset lower({
        {"A", {1}, {0.8, 7.50}},
        {"B", {1}, {1.8, 2.50}},
        {"C", {1}, {1.6, 5.75}},
        {"D", {1}, {2.5, 2.75}},
        {"E", {1}, {2.8, 6.75}},
        {"F", {1}, {3.8, 1.83}},
        {"G", {1}, {3.4, 4.50}},
        {"H", {1}, {4.7, 1.50}},
        {"I", {1}, {5.6, 1.67}},
        {"J", {1}, {6.7, 0.75}},
    });
    robdea::Dataset upper({
        {"A", {1}, {1.2, 8.50}},
        {"B", {1}, {2.2, 3.50}},
        {"C", {1}, {2.4, 6.25}},
        {"D", {1}, {3.5, 3.25}},
        {"E", {1}, {3.2, 7.25}},
        {"F", {1}, {4.2, 2.17}},
        {"G", {1}, {4.6, 5.50}},
        {"H", {1}, {5.3, 2.50}},
        {"I", {1}, {6.4, 2.33}},
        {"J", {1}, {7.3, 1.25}},
    });
    return robdea::IntervalDataset(std::move(lower), std::move(upper));
}

inline const std::vector<double> kIntervalLower = {1.0169, 0.5937, 0.8437, 0.6882, 0.9819,
                                                   0.7601, 0.8852, 0.8224, 0.9028, 1.0229};
inline const std::vector<double> kIntervalUpper = {1.1148, 0.7675, 0.9566, 0.8770, 1.1292,
                                                   0.8768, 1.0643, 0.9814, 1.0482, 1.1318};
inline const std::vector<bool> kIntervalAlways = {true,  false, false, false, false,
                                                  false, false, false, false, true};
inline const std::vector<bool> kIntervalNever = {false, true,  true,  true,  false,
                                                 true,  false, true,  false, false};

// One input, one output, eight units; the variable-returns-to-scale case.
inline robdea::Dataset single_factor() {
    return robdea::Dataset({
        {"A", {2}, {1}},
        {"B", {3}, {3}},
        {"C", {2}, {2}},
        {"D", {4}, {3}},
        {"E", {6}, {5}},
        {"F", {5}, {2}},
        {"G", {6}, {3}},
        {"H", {8}, {5}},
    });
}

inline const std::vector<double> kBccClassical = {1.0, 1.0, 1.0, 0.75, 1.0, 0.40, 0.50, 0.75};
inline const std::vector<double> kBccRobustLp = {1.00, 1.05, 1.11, 0.86, 1.14, 0.57, 0.67, 0.86};

}  // namespace fixtures
