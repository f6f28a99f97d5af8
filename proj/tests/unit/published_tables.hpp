#pragma once

#include <vector>

// Published counts by size (row n-1) and doubled genus (column 0..8).
namespace nomaps::testdata {

inline const std::vector<std::vector<const char*>> kMapsTable = {
    {"2", "1", "0", "0", "0", "0", "0", "0", "0"},
    {"9", "10", "5", "0", "0", "0", "0", "0", "0"},
    {"54", "98", "104", "41", "0", "0", "0", "0", "0"},
    {"378", "983", "1647", "1380", "509", "0", "0", "0", "0"},
    {"2916", "10062", "23560", "31225", "24286", "8229", "0", "0", "0"},
    {"24057", "105024", "320198", "592824", "724866", "516958", "166377", "0", "0"},
    {"208494", "1112757", "4222792", "10185056", "17312568", "19381145", "13093972", "4016613", "0"},
    {"1876446", "11934910", "54617267", "164037704", "361811054", "562395292", "595145086", "382630152", "113044185"},
    {"17399772", "129307100", "696972524", "2525186319", "6912864180", "13929564070", "20431929240", "20549348578", "12704958810"},
    {"165297834", "1412855500", "8807574390", "37596421940", "123814835628", "309411522140", "587509756150", "818177659640", "790343495467"},
    {"1602117468", "15548498902", "110483092984", "545585129474", "2111880200672", "6344707786945", "14923379377192", "26881028060634", "35918779737610"},
    {"15792300756", "172168201088", "1377998069826", "7758174844664", "34669329147582", "122357481545872", "345651571125768", "770725841809552", "1330964564940140"},
    {"157923007560", "1916619748084", "17108920039328", "108518545261360", "551879941676492", "2247532739398856", "7452363840633244", "19946409152977346", "42611002435124552"},
    {"1598970451545", "21436209373224", "211636362018548", "1497384373878512", "8565305839025180", "39681114425793904", "151717486205709730", "476412224477845444", "1220973091185233106"},
    {"16365932856990", "240741065193282", "2609949110616064", "20426386710028260", "130146976774282440", "677939355268197412", "2946794762696249280", "10665684328125155376", "32054128913697072040"},
    {"169114639522230", "2713584138389838", "32104324480419131", "275940187259609296", "1942255149093281772", "11265765391845733784", "55029552840385680100", "226357454725004343024", "783804517126931727890"},
};

inline const std::vector<std::vector<const char*>> kBipartiteTable = {
    {"1", "0", "0", "0", "0", "0", "0", "0", "0"},
    {"3", "1", "0", "0", "0", "0", "0", "0", "0"},
    {"12", "9", "4", "0", "0", "0", "0", "0", "0"},
    {"56", "69", "63", "20", "0", "0", "0", "0", "0"},
    {"288", "510", "720", "480", "148", "0", "0", "0", "0"},
    {"1584", "3738", "7254", "7584", "4860", "1348", "0", "0", "0"},
    {"9152", "27405", "68460", "99372", "99036", "57204", "15104", "0", "0"},
    {"54912", "201569", "621315", "1169640", "1607432", "1445760", "793260", "198144", "0"},
    {"339456", "1488762", "5496208", "12841632", "22759560", "28251720", "24092916", "12500640", "2998656"},
    {"2149888", "11043318", "47759130", "134278720", "293971176", "470885712", "553335140", "446044020", "222034464"},
    {"13891584", "82257890", "409620156", "1354371348", "3553592152", "7034561160", "10652501508", "11827897444", "9139492032"},
    {"91287552", "615092178", "3478672642", "13287239184", "40855164228", "96964428080", "181251943620", "259263273912", "275741173612"},
    {"608583680", "4615882908", "29315742924", "127526774024", "451592018748", "1256403317832", "2812951666460", "4965451637328", "6799083573828"},
    {"4107939840", "34752865332", "245539064736", "1202371430148", "4836001359644", "15499423803780", "40643437847436", "85911625991020", "145094953853052"},
    {"28030648320", "262437282621", "2046309441924", "11170818315900", "50454786158100", "183709516250796", "554529301430940", "1372607347932900", "2774708761422460"},
    {"193100021760", "1987229885913", "16983591315267", "102508926612240", "515031678182160", "2106284848285632", "7218066635434760", "20563312515574176", "48658560979911312"},
};

inline const std::vector<std::vector<const char*>> kTriangulationsTable = {
    {"4", "9", "7", "0", "0", "0", "0", "0", "0"},
    {"32", "118", "202", "128", "0", "0", "0", "0", "0"},
    {"336", "1773", "4900", "6786", "3885", "0", "0", "0", "0"},
    {"4096", "28650", "112046", "249416", "309792", "163840", "0", "0", "0"},
    {"54912", "484578", "2490132", "7820190", "15536592", "17742726", "8878870", "0", "0"},
    {"786432", "8457708", "54442636", "224154528", "626073960", "1140086560", "1227058016", "587202560", "0"},
    {"11824384", "151054173", "1177912344", "6064485588", "22147258392", "56574101430", "96836144376", "99359372628", "45877917085"},
    {"184549376", "2745685954", "25302706734", "157592065776", "718135826112", "2394618429216", "5738654714432", "9344829276160", "9227542480640"},
    {"2966845440", "50606020854", "540709469284", "3975252852294", "21875815507824", "90903502798380", "283959455776728", "646430229699516", "1011244742721480"},
    {"48855252992", "943283037684", "11509659737732", "98013064376240", "635740513124184", "3186926652389376", "12391917590699520", "36729466978572288", "80222081136864896"},
    {"820675092480", "17746990547634", "244254583041960", "2373323509105164", "17808561973715832", "105134232237568182", "492702239182522512", "1816211696054002632", "5159782135287908304"},
    {"14018773254144", "336517405188900", "5170993925895980", "56632532943141168", "484348105828421472", "3305475583204245376", "18229054925434379424", "80930038930104447744", "285723552389864612352"},
    {"242919827374080", "6423775409047716", "109258058984867592", "1335091307453227116", "12857728996745420112", "99951709676667034212", "636795227835309684024", "3324906134317505727756", "14128927461188199914592"},
    {"4261707069259776", "123332141503711704", "2304778527410416728", "31155184166556067968", "334487003255090327376", "2926388895694344300864", "21225085309259820837824", "127965696661596592413184", "639196545524077326637824"},
    {"75576645116559360", "2379824766494404317", "48552885599587471920", "720738499764872647080", "8553392225715199201200", "83383518174303020028732", "680321493460375920656880", "4667484955217376877322616", "26909217174327495052218480"},
};

}  // namespace nomaps::testdata
