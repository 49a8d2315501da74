#include "biplot/cases.hpp"

#include "biplot/error.hpp"

#include <string>

namespace biplot {
namespace {

DataTable countries() {
    return DataTable(
        "case1-european-countries",
        {"Germany", "France", "United Kingdom", "Italy", "Spain", "Sweden", "Netherlands", "Austria", "Denmark",
         "Belgium", "Finland", "Norway", "Ireland", "Portugal", "Poland", "Czech Republic", "Hungary", "Slovenia",
         "Romania", "Slovakia", "Bulgaria"},
        {"MILL €", "GDP", "RES", "%HR", "DOC", "CIT", "CAVG", "NCIT"},
        Matrix{
            {69810, 2.82, 484566, 44.8, 119216, 228773, 1.76, 1.36},
            {43633, 2.26, 295696, 43.9, 87430, 148995, 1.57, 1.39},
            {30071, 1.77, 385489, 45.1, 123756, 253482, 1.81, 1.42},
            {19539, 1.26, 149314, 33.8, 67459, 118043, 1.6, 1.23},
            {14588, 1.39, 221314, 39, 59642, 96368, 1.48, 1.10},
            {11869, 3.42, 72692, 50.8, 25257, 54567, 2.03, 1.39},
            {10769, 1.83, 54505, 51.9, 39499, 96134, 2.22, 1.66},
            {7890, 2.76, 59341, 39.2, 15476, 31879, 1.9, 1.23},
            {7208, 3.06, 52568, 51.9, 15042, 38504, 2.38, 1.60},
            {7047, 1.99, 55858, 49.3, 21978, 46169, 1.95, 1.44},
            {6971, 3.87, 55797, 50.6, 13308, 25310, 1.81, 1.26},
            {5342, 1.71, 44762, 51.5, 12755, 22401, 1.62, 1.39},
            {2796, 1.79, 21393, 45.9, 9499, 17728, 1.73, 1.24},
            {2747, 1.59, 86369, 23.9, 12957, 16756, 1.22, 1.05},
            {2607, 0.74, 98165, 36.3, 26057, 23729, 0.88, 0.64},
            {2334, 1.56, 43092, 37.8, 13790, 17005, 1.18, 0.77},
            {1126, 1.16, 35267, 33, 7542, 10648, 1.34, 0.91},
            {745, 2.11, 10444, 40.8, 4104, 4697, 1.1, 1.05},
            {572, 0.47, 30645, 24.4, 10897, 6254, 0.56, 0.73},
            {416, 0.63, 21832, 33.5, 4195, 4043, 0.93, 0.72},
            {214, 0.6, 14699, 31.6, 3293, 2285, 0.68, 0.74},
        });
}

DataTable universities() {
    return DataTable(
        "case2-top-universities",
        {"ETH Zürich", "Imperial College London", "University of Oxford", "University College London",
         "University of British Columbia", "University of Cambridge", "Massachusetts Institute of Technology",
         "University of Toronto", "Columbia University", "Harvard University", "Georgia Institute of Technology",
         "Johns Hopkins University", "University of Chicago", "Stanford University",
         "California Institute of Technology", "Yale University", "Carnegie Mellon University",
         "Cornell University", "University of California Berkeley", "Princeton University",
         "University of Michigan", "Duke University", "University of California Los Angeles",
         "University of Washington", "University of Pennsylvania"},
        {"Teaching", "International Outlook", "Research", "Citations"},
        Matrix{
            {79.1, 97.5, 85.8, 87.2},
            {88.8, 92.2, 88.7, 93.9},
            {89.5, 91.9, 96.6, 97.9},
            {77.8, 91.8, 84.3, 89},
            {68.6, 88.7, 78.6, 85.2},
            {90.5, 85.3, 94.2, 97.3},
            {92.7, 79.2, 87.4, 100},
            {76.9, 69, 87.4, 86.5},
            {89.1, 67.6, 81.8, 97.8},
            {95.8, 67.5, 97.4, 99.8},
            {66.6, 65, 73.8, 91.9},
            {78.9, 59.9, 86.5, 97.3},
            {89.4, 58.8, 90.8, 99.4},
            {94.8, 57.2, 98.9, 99.8},
            {95.7, 56, 98.2, 99.9},
            {92.3, 55.5, 91.2, 96.7},
            {65.7, 55, 79.5, 97.4},
            {70.4, 53.4, 87.2, 93.5},
            {82.8, 50.4, 99.4, 99.4},
            {91.5, 49.6, 99.1, 100},
            {75.4, 47.2, 90, 94.3},
            {62.6, 46.9, 77.9, 97.4},
            {85.9, 41, 92.5, 97.3},
            {70.8, 36.9, 74, 98.2},
            {87, 34.3, 86.1, 97.9},
        });
}

// normalized block: each indicator scaled so the best national performer scores 1
DataTable granada_fields() {
    return DataTable(
        "case3-granada-fields",
        {"Agricultural Sciences", "Biological Sciences", "Earth Sciences", "Economics & Business", "Physics",
         "Engineering", "Mathematics", "Medicine & Pharmacy", "Social Sciences", "Psychology", "Chemistry",
         "Inf. Technology"},
        {"NDOC", "NCIT", "H-Index", "%Q1", "ACIT", "TOPCIT"},
        Matrix{
            {0.352, 0.408, 0.737, 0.885, 0.854, 0.733},
            {0.329, 0.244, 0.622, 0.548, 0.543, 0.385},
            {0.729, 0.577, 0.742, 0.891, 0.658, 0.579},
            {0.350, 0.300, 0.571, 0.275, 0.677, 0.961},
            {0.374, 0.577, 0.560, 0.793, 1.000, 0.662},
            {0.320, 0.381, 0.733, 0.844, 0.465, 0.643},
            {0.860, 0.798, 0.762, 0.638, 0.525, 0.523},
            {0.270, 0.171, 0.452, 0.653, 0.628, 0.650},
            {0.809, 0.652, 0.917, 0.523, 0.584, 0.315},
            {0.911, 0.652, 0.800, 0.376, 0.456, 0.335},
            {0.376, 0.262, 0.591, 0.813, 0.534, 0.379},
            {0.584, 1.000, 1.000, 0.689, 0.891, 0.942},
        });
}

} // namespace

DataTable load_case(int id) {
    switch (id) {
    case 1: return countries();
    case 2: return universities();
    case 3: return granada_fields();
    default: throw InputError("unknown case id " + std::to_string(id) + " (expected 1, 2 or 3)");
    }
}

} // namespace biplot
