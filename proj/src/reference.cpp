// Copyright 2026 The gapsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gapsieve/reference.hpp"

#include "gapsieve/error.hpp"

namespace gapsieve::reference {
namespace {

constexpr PairCount kPairs[] = {
    {1, 1, 4623042}, {1, 3, 7429438}, {1, 7, 7504612}, {1, 9, 5442345},
    {3, 1, 6010982}, {3, 3, 4442562}, {3, 7, 7043695}, {3, 9, 7502896},
    {7, 1, 6373981}, {7, 3, 6755195}, {7, 7, 4439355}, {7, 9, 7431870},
    {9, 1, 7991431}, {9, 3, 6372941}, {9, 7, 6012739}, {9, 9, 4622916},
};

constexpr ObservedClass kObserved[] = {
    {2, 22852739, 1.0},      {4, 19790617, 0.866006}, {6, 21762703, 0.952302},
    {8, 17466066, 0.764288}, {0, 18127875, 0.793247},
};

constexpr PopulationRow kPopulations[] = {
    {2, {"217929355875", "0", "0", "0"}, 1.0, "1"},
    {4, {"217929355875", "0", "0", "0"}, 1.0, "1"},
    {6, {"293920842950", "141937868800", "0", "0"}, 1.348698, "2"},
    {8, {"91589444450", "110741954050", "15597957375", "0"}, 0.420271, "1"},
    {10, {"108861586050", "150514973700", "31195914750", "0"}, 0.499527, "4/3"},
    {12, {"83462164156", "219604134932", "121198832118", "11593580544"}, 0.382978, "2"},
    {14, {"83462164156", "115853913448", "93409823052", "17390370816"}, 0.159965, "6/5"},
    {16, {"16996070868", "78769359396", "91933104354", "28714181132"}, 0.077989, "1"},
    {18, {"21218333416", "122467715552", "191942799048", "91130022084"}, 0.097363, "2"},
    {20, {"4814320320", "43021526040", "111304219860", "100872302880"}, 0.022091, "4/3"},
    {22, {"5454179550", "39892554000", "93242799000", "81714578400"}, 0.025027, "10/9"},
    {24, {"4073954144", "40186134868", "126323098182", "162790595856"}, 0.018694, "2"},
    {26, {"918069454", "12091107788", "51322797162", "88711954896"}, 0.004213, "12/11"},
    {28, {"857901000", "12427836600", "55357035900", "98053394600"}, 0.003937, "6/5"},
    {30, {"535673924", "10415825728", "65248580472", "171951637976"}, 0.002458, "8/3"},
    {32, {"58664256", "1599900552", "13444986588", "46806142904"}, 0.000269, "1"},
    {34, {"69404898", "1684816476", "13621926834", "47836532832"}, 0.000318, "16/15"},
    {36, {"46346428", "1439916356", "14571970374", "64004385832"}, 0.000213, "2"},
    {38, {"7381190", "318303280", "4219159800", "23451227440"}, 0.000034, "18/17"},
    {40, {"10176048", "359222796", "4396494114", "24594847992"}, 0.000047, "4/3"},
    {42, {"4153336", "201583172", "3188901438", "22696587504"}, 0.000019, "12/5"},
    {44, {"526596", "37126032", "772483368", "6703381264"}, 0.000002, "10/9"},
    {46, {"291342", "21296376", "459181188", "4284667104"}, 0.000001, "22/21"},
    {48, {"239760", "19964064", "493227744", "5290003952"}, 0.000001, "2"},
    {50, {"91392", "7454520", "183370572", "2026286376"}, 4.2e-7, "4/3"},
    {52, {"8912", "1337188", "52081950", "819360400"}, 4.1e-8, "12/11"},
    {54, {"25320", "2992860", "97569690", "1348117880"}, 1.2e-7, "2"},
    {56, {"2952", "422196", "18140238", "326084664"}, 1.4e-8, "6/5"},
    {58, {"1654", "307068", "14158938", "264266960"}, 7.6e-9, "28/27"},
    {60, {"452", "110300", "6862242", "173593136"}, 2.1e-9, "8/3"},
    {62, {"26", "8248", "645804", "19784976"}, 1.2e-10, "30/29"},
    {64, {"48", "12528", "890688", "25971336"}, 2.2e-10, "1"},
    {66, {"24", "6744", "545796", "18824896"}, 1.1e-10, "20/9"},
};

constexpr ClassMeanRow kMeans[] = {
    {0, 0, "", 0.000},       {0, 10, "4/3", 1.333},   {0, 20, "4/3", 1.333},   {0, 30, "8/3", 1.777},
    {0, 40, "4/3", 1.666},   {0, 50, "4/3", 1.600},   {0, 60, "8/3", 1.777},   {0, 70, "8/5", 1.752},
    {0, 80, "4/3", 1.700},   {0, 90, "8/3", 1.807},
    {2, 2, "1", 1.000},      {2, 12, "2", 1.500},     {2, 22, "10/9", 1.370},  {2, 32, "1", 1.277},
    {2, 42, "12/5", 1.502},  {2, 52, "12/11", 1.433}, {2, 62, "30/29", 1.376}, {2, 72, "2", 1.454},
    {2, 82, "40/39", 1.406}, {2, 92, "22/21", 1.370},
    {4, 4, "1", 1.000},      {4, 14, "6/5", 1.100},   {4, 24, "2", 1.400},     {4, 34, "16/15", 1.316},
    {4, 44, "10/9", 1.275},  {4, 54, "2", 1.396},     {4, 64, "1", 1.339},     {4, 74, "36/35", 1.300},
    {4, 84, "12/5", 1.422},  {4, 94, "46/45", 1.382},
    {6, 6, "2", 2.000},      {6, 16, "1", 1.500},     {6, 26, "12/11", 1.363}, {6, 36, "2", 1.522},
    {6, 46, "22/21", 1.427}, {6, 56, "6/5", 1.389},   {6, 66, "20/9", 1.508},  {6, 76, "18/17", 1.452},
    {6, 86, "42/41", 1.404}, {6, 96, "2", 1.464},
    {8, 8, "1", 1.000},      {8, 18, "2", 1.500},     {8, 28, "6/5", 1.400},   {8, 38, "18/17", 1.314},
    {8, 48, "2", 1.451},     {8, 58, "28/27", 1.382}, {8, 68, "16/15", 1.337}, {8, 78, "24/11", 1.443},
    {8, 88, "10/9", 1.406},  {8, 98, "6/5", 1.385},
};

constexpr double kUnpublished = -1.0;

constexpr ClassRatioRow kBase10[] = {
    {2, kUnpublished, 1.0}, {4, kUnpublished, 1.0007}, {6, kUnpublished, 1.0029},
    {8, kUnpublished, 1.0026}, {0, kUnpublished, 1.3192},
};

constexpr ClassRatioRow kBase3[] = {
    {2, 1.0, 1.0},
    {1, 1.0009, 1.0010},
    {0, 1.6358, 1.9868},
};

constexpr ClassRatioRow kBase8[] = {
    {2, 1.0, 1.0},
    {4, 0.9695, 1.0185},
    {6, 1.0086, 1.0003},
    {0, 0.7081, 0.9676},
};

constexpr ClassRatioRow kBase30[] = {
    {2, 1.0, 1.0},         {4, 1.0180, 1.0019},  {6, 1.7771, 2.0021},  {8, 0.8154, 1.0000},
    {10, 1.0421, 1.3245},  {12, 1.4228, 1.9918}, {14, 0.7501, 1.0028}, {16, 0.5890, 1.0015},
    {18, 1.0775, 1.9956},  {20, 0.6116, 1.3287}, {22, 0.5109, 1.0020}, {24, 0.8031, 1.9920},
    {26, 0.3920, 1.0019},  {28, 0.4122, 1.0086}, {0, 0.7578, 2.6153},
};

}  // namespace

std::span<const PairCount> last_digit_pairs() { return kPairs; }
std::span<const ObservedClass> observed_classes() { return kObserved; }
std::span<const PopulationRow> populations_37() { return kPopulations; }
std::span<const ClassMeanRow> class_means_base10() { return kMeans; }

std::span<const ClassRatioRow> class_ratios(unsigned base) {
  switch (base) {
    case 10: return kBase10;
    case 3: return kBase3;
    case 8: return kBase8;
    case 30: return kBase30;
    default: throw DomainError("no published class ratios for base " + std::to_string(base));
  }
}

}  // namespace gapsieve::reference
