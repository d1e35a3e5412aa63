#pragma once

// Diagonal certificates for the trace-bound forms, as published.

#include <cstdint>
#include <string>
#include <vector>

namespace monosol {

struct EmbeddedCertificate {
  std::string family;
  std::int64_t a;
  int k;
  std::int64_t scale_num;
  std::int64_t scale_den;
  std::vector<std::string> entries;
};

inline const std::vector<EmbeddedCertificate>& embedded_certificates() {
  static const std::vector<EmbeddedCertificate> certs = {
      {"ax-ay", 3, 54, 1, 209952,
       {
         "62", "66", "70", "74", "78", "82", "86", "90", "94", "98", "102", "106", "110", "114", "118",
         "122", "126", "130", "132", "132", "132", "132", "132", "132", "132", "132", "132", "132", "132",
         "132", "132", "132", "132", "132", "132", "132", "130", "126", "122", "118", "114", "110", "106",
         "102", "98", "94", "90", "86", "82", "78", "74", "70", "66", "62", "61", "59", "57", "53", "51",
         "49", "45", "43", "41", "37", "35", "33", "29", "27", "25", "21", "19", "17", "14", "14", "14",
         "12", "12", "12", "10", "10", "10", "8", "8", "8", "6", "6", "6", "4", "4", "4", "3", "5", "7", "7",
         "9", "11", "11", "13", "15", "15", "17", "19", "19", "21", "23", "23", "25", "27"
       }},
      {"ax-ay", 4, 16, 1, 32768,
       {
         "3", "9", "15", "21", "24", "24", "24", "24", "24", "24", "24", "24", "21", "15", "9", "3", "41",
         "39", "37", "35", "30", "30", "30", "30", "26", "26", "26", "26", "23", "25", "27", "29"
       }},
      {"ax-ay", 5, 25, 1, 125000,
       {
         "4", "12", "20", "28", "36", "40", "40", "40", "40", "40", "40", "40", "40", "40", "40", "40", "40",
         "40", "40", "40", "36", "28", "20", "12", "4", "121", "119", "117", "115", "113", "106", "106",
         "106", "106", "106", "100", "100", "100", "100", "100", "94", "94", "94", "94", "94", "89", "91",
         "93", "95", "97"
       }},
      {"ax-ay", 6, 36, 1, 373248,
       {
         "5", "15", "25", "35", "45", "55", "60", "60", "60", "60", "60", "60", "60", "60", "60", "60", "60",
         "60", "60", "60", "60", "60", "60", "60", "60", "60", "60", "60", "60", "60", "55", "45", "35",
         "25", "15", "5", "253", "251", "249", "247", "245", "243", "234", "234", "234", "234", "234", "234",
         "226", "226", "226", "226", "226", "226", "218", "218", "218", "218", "218", "218", "210", "210",
         "210", "210", "210", "210", "203", "205", "207", "209", "211", "213"
       }},
      {"ax-ay", 7, 49, 1, 941192,
       {
         "6", "18", "30", "42", "54", "66", "78", "84", "84", "84", "84", "84", "84", "84", "84", "84", "84",
         "84", "84", "84", "84", "84", "84", "84", "84", "84", "84", "84", "84", "84", "84", "84", "84",
         "84", "84", "84", "84", "84", "84", "84", "84", "84", "78", "66", "54", "42", "30", "18", "6",
         "449", "447", "445", "443", "441", "439", "437", "426", "426", "426", "426", "426", "426", "426",
         "416", "416", "416", "416", "416", "416", "416", "406", "406", "406", "406", "406", "406", "406",
         "396", "396", "396", "396", "396", "396", "396", "386", "386", "386", "386", "386", "386", "386",
         "377", "379", "381", "383", "385", "387", "389"
       }},
      {"x+y=3z", 3, 30, 1, 259200,
       {
         "1.52625029424193", "7.13472273267136", "9.82265291183994", "7.83419180674646", "13.2109296915416",
         "20.8751792783345", "15.3089585102576", "9.25870080147831", "8.19058277713545", "13.1809852450228",
         "13.1809852450181", "16.0328894562698", "6.91545792002705", "0.599907563422803", "9.50693006172301",
         "10.5063647943975", "19.1826045564940", "15.8643109427448", "9.77858541708185", "13.6613915855486",
         "19.9455937540945", "24.4274671277702", "24.4274671277680", "24.4274671277802", "25.4460632299112",
         "25.4460632299175", "25.4460632299234", "22.6076114659320", "22.6076114659365", "22.6076114659281",
         "1.52625029424280", "7.13472273266820", "9.82265291183396", "7.83419180674915", "13.2109296915387",
         "20.8751792783391", "15.3089585102469", "9.25870080147229", "8.19058277713694", "13.1809852450137",
         "13.1809852450188", "16.0328894562674", "6.91545792001992", "0.599907563423494", "9.50693006171557",
         "10.5063647944014", "19.1826045564880", "15.8643109427641", "9.77858541708290", "13.6613915855242",
         "19.9455937540848", "24.4274671277696", "24.4274671277692", "24.4274671277664", "25.4460632299061",
         "25.4460632299254", "25.4460632299143", "22.6076114659347", "22.6076114659356", "22.6076114659403",
         "1.52625029424287", "7.13472273266038", "9.82265291183561", "7.83419180674793", "13.2109296915385",
         "20.8751792783367", "15.3089585102529", "9.25870080147053", "8.19058277713283", "13.1809852450232",
         "13.1809852450176", "16.0328894562679", "6.91545792003126", "0.599907563422704", "9.50693006172368",
         "10.5063647944013", "19.1826045564943", "15.8643109427621", "9.77858541707903", "13.6613915855242",
         "19.9455937540863", "24.4274671277702", "24.4274671277736", "24.4274671277731", "25.4460632299182",
         "25.4460632299198", "25.4460632299157", "22.6076114659358", "22.6076114659345", "22.6076114659353"
       }},
      {"schur-example", 1, 11, 1, 121,
       {
         "1/2", "1/2", "1/4", "0", "0", "1/4", "1/2", "1/2", "1/4", "0", "0"
       }},
  };
  return certs;
}

}  // namespace monosol
