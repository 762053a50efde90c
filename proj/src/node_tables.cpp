// Generated by tools/gen_node_tables.py. Do not edit.

#include "node_tables.hpp"

namespace lbie::detail {

namespace {

// order 1: 3 nodes, quadrature degree 2
constexpr double kNodes1[] = {
    0.6632245068737859, 0.16665465264175508,
    0.16313938988626975, 0.16313938988816273,
    0.16665465264128673, 0.6632245068760955,
};

// order 2: 6 nodes, quadrature degree 4
constexpr double kNodes2[] = {
    0.8123240035593845, 0.09195266522796229,
    0.08664399134072852, 0.08664399133328604,
    0.43669659442550673, 0.1075734616008336,
    0.10757346160151021, 0.43669659440907876,
    0.4454574809830091, 0.4454574809851903,
    0.09195266522725741, 0.8123240035530302,
};

// order 3: 10 nodes, quadrature degree 5
constexpr double kNodes3[] = {
    0.8546843529834461, 0.07091272990579822,
    0.06992388359021517, 0.06992388358614926,
    0.6047992884932912, 0.0711694533254548,
    0.3071743277759319, 0.07146979744546497,
    0.07146979743576337, 0.307174327782995,
    0.6156825234351884, 0.3136722069657591,
    0.3341811183372491, 0.33418111834051273,
    0.07116945333251413, 0.6047992884986856,
    0.3136722069691312, 0.6156825234402364,
    0.0709127299036807, 0.8546843529857389,
};

// order 4: 15 nodes, quadrature degree 7
constexpr double kNodes4[] = {
    0.04974352124406507, 0.04974352124476718,
    0.8983936816585709, 0.0500743760775598,
    0.7133181095529701, 0.0483020899170473,
    0.2235642134962987, 0.046937077568172066,
    0.4608351423358446, 0.05144493304484614,
    0.7205330538891452, 0.23016068585829924,
    0.046937077566856215, 0.2235642134980772,
    0.2388903550370294, 0.23889035503996842,
    0.5123469112657177, 0.24174940818082402,
    0.473912096208655, 0.4739120962062094,
    0.0514449330448147, 0.46083514233193684,
    0.24174940817412244, 0.5123469112752231,
    0.23016068586234567, 0.7205330538861789,
    0.04830208991456906, 0.7133181095474289,
    0.05007437607939634, 0.8983936816540529,
};

// order 5: 21 nodes, quadrature degree 8
constexpr double kNodes5[] = {
    0.029975050287051545, 0.02997505028500057,
    0.9357333969660686, 0.03241476608877168,
    0.7839367539274155, 0.039651897299338865,
    0.16644985695948136, 0.040290606776699364,
    0.36665890286639674, 0.040594671382408104,
    0.5723367354015788, 0.039613785717849535,
    0.04029060677523859, 0.1664498569576232,
    0.7854854428891483, 0.17071638900217448,
    0.604703461265605, 0.19308192623621462,
    0.19311827258390607, 0.1931182725789753,
    0.3988596285900207, 0.1953367661934239,
    0.04059467138738277, 0.36665890286453257,
    0.5887924657801309, 0.3736149019010935,
    0.40872041153761446, 0.40872041153206934,
    0.19533676620060797, 0.39885962858869795,
    0.039613785715926136, 0.572336735401594,
    0.37361490190233093, 0.5887924657757538,
    0.19308192623343676, 0.6047034612687662,
    0.1707163890060278, 0.7854854428870467,
    0.0396518973001293, 0.7839367539236991,
    0.03241476609023351, 0.935733396961802,
};

// order 6: 28 nodes, quadrature degree 8
constexpr double kNodes6[] = {
    0.9476219874354294, 0.026622558977832857,
    0.026201213209160204, 0.026201213210130952,
    0.1319636155722057, 0.034308476744456994,
    0.8271370473386543, 0.03259772960022804,
    0.2843663280662291, 0.03269967301295395,
    0.6663703660012559, 0.03298596078031828,
    0.473570587787229, 0.04071076722485775,
    0.0343084767411623, 0.13196361557150219,
    0.830987247313039, 0.13448273015762283,
    0.15683126706135725, 0.15683126706836834,
    0.6906870335647218, 0.155563976897987,
    0.5064966271675538, 0.17000390161955106,
    0.32050064910631865, 0.17145280895031334,
    0.03269967301231355, 0.28436632806264395,
    0.6758265424119171, 0.29330125437804727,
    0.5083210987554028, 0.3214605851923276,
    0.17145280895022794, 0.3205006491082553,
    0.3334212210561905, 0.33342122105745303,
    0.040710767225334066, 0.4735705877918825,
    0.4789865553019883, 0.47898655530076467,
    0.32146058519387166, 0.5083210987556224,
    0.1700039016204938, 0.5064966271669901,
    0.03298596077954066, 0.6663703659995154,
    0.2933012543777476, 0.6758265424117388,
    0.15556397689373705, 0.6906870335635938,
    0.13448273015601445, 0.8309872473124538,
    0.03259772959852303, 0.8271370473391947,
    0.026622558976672806, 0.947621987439369,
};

// order 7: 36 nodes, quadrature degree 11
constexpr double kNodes7[] = {
    0.9506220412274534, 0.023712543924208018,
    0.024228712886087994, 0.024228712880424583,
    0.10772626190602759, 0.021506448859486365,
    0.8616108235918936, 0.022415647200429458,
    0.7276438233161714, 0.025823347450144474,
    0.2311803391770647, 0.026884557168759118,
    0.5646359945110946, 0.025163105161087357,
    0.3898185508401881, 0.025650214029477758,
    0.021506448853095897, 0.10772626189540657,
    0.8676739296006403, 0.10995795314917495,
    0.11799234052402817, 0.11799234053127564,
    0.7582808318059016, 0.1187193101765964,
    0.5852549756197244, 0.1282554602405784,
    0.2705556637621558, 0.13256189415343722,
    0.42274218266707514, 0.12554051741225605,
    0.02688455717212661, 0.23118033917452835,
    0.7340725888231866, 0.23855895498102067,
    0.594154326775941, 0.273583203473557,
    0.13256189416187944, 0.2705556637703629,
    0.4399040931468575, 0.2812515533316571,
    0.2846455349874698, 0.2846455349809657,
    0.025650214028292585, 0.38981855083666095,
    0.575597909829444, 0.3994840343527103,
    0.12554051740843175, 0.4227421826719463,
    0.43908745810076, 0.4390874581105157,
    0.2812515533342458, 0.4399040931458508,
    0.3994840343538872, 0.575597909830468,
    0.025163105161708825, 0.5646359945122162,
    0.12825546024463905, 0.5852549756223487,
    0.27358320347116016, 0.5941543267863441,
    0.025823347450749372, 0.7276438233166953,
    0.23855895498094523, 0.7340725888244762,
    0.11871931017485314, 0.7582808318093919,
    0.10995795315020215, 0.8676739295995404,
    0.02241564719974381, 0.8616108235914172,
    0.02371254392455846, 0.9506220412268197,
};

// order 8: 45 nodes, quadrature degree 11
constexpr double kNodes8[] = {
    0.020631812724436236, 0.020631812727429897,
    0.9578143716691845, 0.020230410348200386,
    0.8889048818758633, 0.019924760697555385,
    0.08527746556031084, 0.01985075650939965,
    0.7755268095467652, 0.022000882259702995,
    0.19163746265560158, 0.022663845098830775,
    0.3252569536879301, 0.027691197351059283,
    0.6331880393840944, 0.027128037033107177,
    0.4808487382377265, 0.021104337025105925,
    0.019850756515202305, 0.08527746556194793,
    0.8931540342807928, 0.08804153382564109,
    0.7894998468277757, 0.1025030573123643,
    0.10690272686855476, 0.10690272686601143,
    0.6600755627467376, 0.1147888535714772,
    0.21959947456455026, 0.11689653746944836,
    0.353933017710067, 0.11974711762901447,
    0.5155980872335411, 0.12015581281786367,
    0.7797782812790339, 0.1952211737527551,
    0.022663845095913834, 0.19163746265800635,
    0.11689653746648787, 0.2195994745667523,
    0.6632049326496997, 0.2199462483554835,
    0.23929049934351812, 0.23929049934531088,
    0.527220752969693, 0.23839793046452631,
    0.3748901992477532, 0.25499425151631006,
    0.02769119735339448, 0.32525695368573193,
    0.6413079558164212, 0.33291751433243677,
    0.5203841769301552, 0.36023020886959695,
    0.11974711763134552, 0.35393301771297836,
    0.2549942515155915, 0.37489019925111744,
    0.3669370796178198, 0.36693707962038713,
    0.4890700502742135, 0.48907005027639994,
    0.021104337024529976, 0.48084873823403707,
    0.36023020886885165, 0.520384176930047,
    0.12015581281837676, 0.5155980872285234,
    0.23839793046275473, 0.5272207529722995,
    0.33291751433262123, 0.6413079558161447,
    0.027128037034204605, 0.633188039385734,
    0.11478885357211852, 0.6600755627460567,
    0.21994624835713675, 0.6632049326496794,
    0.022000882258741857, 0.7755268095470003,
    0.19522117375400178, 0.7797782812776115,
    0.10250305731243776, 0.7894998468274906,
    0.019924760698258756, 0.8889048818739219,
    0.0880415338266562, 0.8931540342800341,
    0.020230410348062403, 0.9578143716694841,
};

// order 9: 55 nodes, quadrature degree 12
constexpr double kNodes9[] = {
    0.97376227999719, 0.013371590046738742,
    0.012533549246337528, 0.012533549247322326,
    0.072899047867005, 0.01812714799221854,
    0.9048331491368532, 0.017687137548524048,
    0.8117590588044115, 0.019898479724529686,
    0.15942499876186436, 0.019456179428055345,
    0.6914204288318825, 0.021278138804355765,
    0.2748118690170035, 0.02132136779578103,
    0.5499166782940222, 0.021328983849412946,
    0.41336823387221017, 0.021506206984341837,
    0.01812714798999869, 0.07289904786711285,
    0.9064599938489161, 0.07383956648061071,
    0.8298949346939368, 0.08586891218401636,
    0.0848752739501293, 0.0848752739588958,
    0.7150202257188901, 0.0977465333735654,
    0.18375966554254747, 0.09874001862078953,
    0.5826905972403013, 0.10657156511942892,
    0.3006048829295927, 0.10559707222404172,
    0.4428974585730302, 0.10470568155692746,
    0.8186286933122108, 0.16405304287901418,
    0.019456179426253176, 0.1594249987602828,
    0.7178462338147366, 0.1844737462576815,
    0.09874001862321681, 0.18375966554300932,
    0.20478904420426733, 0.204789044206895,
    0.5954185929494118, 0.20221220594753153,
    0.3186129364522633, 0.21849832014500695,
    0.4672566031681207, 0.22149396552878767,
    0.6956874234951851, 0.28113991260685883,
    0.021321367798596752, 0.2748118690177937,
    0.10559707222830085, 0.3006048829283169,
    0.5863372148248105, 0.3043172451925707,
    0.4610282403558126, 0.3173015871916933,
    0.21849832014172138, 0.31861293645547456,
    0.32989202772392434, 0.32989202772434534,
    0.021506206982732173, 0.4133682338721621,
    0.5600473092846834, 0.41959821994852425,
    0.10470568155359183, 0.44289745857144197,
    0.4497610930556488, 0.4497610930563273,
    0.31730158719065255, 0.4610282403587005,
    0.2214939655269938, 0.46725660316567186,
    0.02132898385013334, 0.5499166782967958,
    0.4195982199469496, 0.5600473092840177,
    0.10657156511900708, 0.5826905972423596,
    0.304317245189244, 0.5863372148224824,
    0.20221220594760816, 0.5954185929500049,
    0.021278138803401177, 0.6914204288329354,
    0.28113991260639054, 0.6956874234956819,
    0.1844737462582592, 0.7178462338141812,
    0.09774653337189766, 0.715020225717195,
    0.16405304287766265, 0.8186286933137913,
    0.019898479723798716, 0.8117590588043582,
    0.08586891218674607, 0.8298949346959559,
    0.017687137550973717, 0.9048331491364049,
    0.07383956648557777, 0.9064599938469963,
    0.013371590048477084, 0.9737622799947689,
};

// order 10: 66 nodes, quadrature degree 13
constexpr double kNodes10[] = {
    0.9681448461504784, 0.015269540855559793,
    0.015850129955993615, 0.01585012995901591,
    0.058717215371922656, 0.012343416786407326,
    0.9238103441284634, 0.013226024895821299,
    0.8396203227310157, 0.016631733338799755,
    0.13608885446930563, 0.017197716496960034,
    0.7344195090547564, 0.020158463696431293,
    0.2349218862419509, 0.01970962484235223,
    0.6134188900918948, 0.017571037918108184,
    0.3557878444044349, 0.01819497174419901,
    0.48213356261800483, 0.019912297917993278,
    0.926735337749931, 0.06128407695599561,
    0.012343416788177995, 0.05871721537439401,
    0.07489662141086159, 0.07489662141025968,
    0.851206683141124, 0.07335852998115874,
    0.15537302970881445, 0.08492524255169562,
    0.7578427141419356, 0.08486609655397374,
    0.6422161916348862, 0.09275793624444742,
    0.2578349185618261, 0.09310482161689312,
    0.3858128445360997, 0.094083544069878,
    0.5091458933342935, 0.09283161252863467,
    0.017197716496105325, 0.13608885446774807,
    0.8429344167516409, 0.13909529734378198,
    0.08492524254967652, 0.155373029709731,
    0.7597297275092548, 0.1559272499931349,
    0.6544453413605977, 0.17320171370812987,
    0.17397125784510462, 0.1739712578438014,
    0.5329225144303813, 0.19408729942003652,
    0.27748435553682355, 0.1932798614556824,
    0.4050901240465807, 0.19538449006922795,
    0.019709624842280792, 0.23492188623986981,
    0.7402320578714027, 0.2401926019611298,
    0.09310482161536975, 0.2578349185613166,
    0.6447698467043361, 0.2615787854472525,
    0.19327986145519935, 0.2774843555350258,
    0.527733835110369, 0.27372272048318563,
    0.2858604869304336, 0.28586048692998534,
    0.4199366569477199, 0.29013531436597895,
    0.6199574395048633, 0.3621904199403663,
    0.018194971743489864, 0.3557878444026203,
    0.5166027547651371, 0.3899580052177754,
    0.09408354406695274, 0.3858128445376967,
    0.4040426875614213, 0.40404268756144124,
    0.1953844900691472, 0.40509012404671974,
    0.2901353143650121, 0.4199366569462648,
    0.01991229791778542, 0.48213356261852713,
    0.48988629049165905, 0.4898862904897007,
    0.38995800521783786, 0.5166027547654513,
    0.09283161253147358, 0.5091458933299634,
    0.19408729941771774, 0.5329225144288587,
    0.2737227204819793, 0.5277338351070492,
    0.01757103791913733, 0.6134188900901388,
    0.36219041994101014, 0.6199574395047344,
    0.09275793624220786, 0.6422161916360738,
    0.26157878544525315, 0.6447698467061626,
    0.17320171370955892, 0.654445341361031,
    0.02015846369448479, 0.7344195090559494,
    0.24019260196069286, 0.7402320578709664,
    0.1559272499958097, 0.7597297275067274,
    0.08486609655340364, 0.7578427141395262,
    0.13909529734052944, 0.8429344167557522,
    0.016631733340167494, 0.8396203227302337,
    0.07335852998214058, 0.8512066831414437,
    0.013226024892838502, 0.9238103441303018,
    0.06128407696134091, 0.926735337745716,
    0.01526954086136941, 0.9681448461441462,
};

// order 11: 78 nodes, quadrature degree 13
constexpr double kNodes11[] = {
    0.9705073550749336, 0.011520884477980248,
    0.014088609834566921, 0.014088609830704646,
    0.05014098369638514, 0.010090604504709949,
    0.9356854813045409, 0.012859274639770876,
    0.8603176598472012, 0.018166078415759703,
    0.11706803228653291, 0.018768450840827795,
    0.20299872825194773, 0.01572573042853402,
    0.7720473300405025, 0.014554940344993078,
    0.3096140897669412, 0.01973769381727637,
    0.6608443956596743, 0.020040086439575038,
    0.5459309936440666, 0.01895467207093311,
    0.42356170313878083, 0.01859658227188843,
    0.010090604503504554, 0.05014098369312282,
    0.9387529400676928, 0.05299676490948649,
    0.8715076903893363, 0.06212845826808979,
    0.06507300625804024, 0.06507300625979646,
    0.13108686561788635, 0.07518660818975789,
    0.7936526421770852, 0.07615788553483605,
    0.22547513136727804, 0.08788095982413545,
    0.6861439653675205, 0.08668551826393983,
    0.5733704739454815, 0.08895100947741101,
    0.3334285153138429, 0.08872322676582862,
    0.45084778790679925, 0.0942984635599908,
    0.018768450841649745, 0.11706803228469315,
    0.8610606763197459, 0.11696079172079432,
    0.07518660819220555, 0.13108686561787683,
    0.7936872204146295, 0.13237549895924705,
    0.15049328295737951, 0.15049328295710737,
    0.699606010758354, 0.14937971349759688,
    0.2418152573181332, 0.16474224287859662,
    0.5943009309774268, 0.16600805215560038,
    0.3563339132485974, 0.17498144777692148,
    0.47149921790952876, 0.17362258916143158,
    0.01572573042893288, 0.20299872825272108,
    0.7775886591949167, 0.20820671590393236,
    0.08788095982344046, 0.22547513136611416,
    0.6860796347075957, 0.22390698005205564,
    0.5927357400436694, 0.24163474324098086,
    0.1647422428788361, 0.24181525731965667,
    0.48109411977846744, 0.2573677424414545,
    0.2579977849659112, 0.2579977849663492,
    0.3687187364365032, 0.2596629191882805,
    0.019737693816123232, 0.3096140897691674,
    0.6654991788923666, 0.31371622475958283,
    0.08872322676474705, 0.333428515315847,
    0.5778226368334937, 0.33809555666082935,
    0.17498144777454122, 0.356333913248698,
    0.47064457084033356, 0.3540351543809952,
    0.37234381351227386, 0.37234381351111634,
    0.2596629191875711, 0.3687187364370237,
    0.5522015234144101, 0.4297778283634357,
    0.018596582272481895, 0.4235617031402904,
    0.09429846356127669, 0.45084778790682545,
    0.45177732944948484, 0.4517773294499548,
    0.1736225891612144, 0.471499217910599,
    0.3540351543809766, 0.4706445708405117,
    0.2573677424397195, 0.4810941197785017,
    0.018954672071870248, 0.5459309936466461,
    0.4297778283636518, 0.5522015234164631,
    0.3380955566634305, 0.5778226368331002,
    0.08895100947656671, 0.5733704739441379,
    0.2416347432408909, 0.5927357400434029,
    0.16600805215482609, 0.5943009309787372,
    0.31371622475780253, 0.6654991788933423,
    0.020040086437132048, 0.6608443956611786,
    0.22390698005109305, 0.6860796347075373,
    0.08668551826573198, 0.6861439653675637,
    0.1493797134978812, 0.6996060107589623,
    0.20820671590367365, 0.7775886591947377,
    0.014554940347819675, 0.7720473300407846,
    0.13237549895927758, 0.7936872204151022,
    0.07615788553474352, 0.7936526421777417,
    0.018166078413650515, 0.8603176598476968,
    0.11696079172199696, 0.8610606763189568,
    0.06212845826914858, 0.8715076903876763,
    0.05299676491024706, 0.9387529400688241,
    0.012859274641991087, 0.9356854813048506,
    0.011520884476498799, 0.9705073550762272,
};

// order 12: 91 nodes, quadrature degree 14
constexpr double kNodes12[] = {
    0.0066419143608898576, 0.006641914369047314,
    0.9867082500411998, 0.008018482494083106,
    0.045771032253278825, 0.01432080812510349,
    0.9384823065922921, 0.011426703010117629,
    0.09950061599227839, 0.011490060357723325,
    0.8831805213846836, 0.01128013540029926,
    0.17840460489278376, 0.016754986769296744,
    0.7980888478859463, 0.01747911959393415,
    0.2700709199665016, 0.015673726463646374,
    0.7046515778483315, 0.01499917851347678,
    0.3752394658521259, 0.01705184992046521,
    0.5963621636335512, 0.017312747453735743,
    0.4859607225974656, 0.016863796183942525,
    0.01432080813348093, 0.04577103225562705,
    0.938532088159153, 0.044343921989272235,
    0.0540444529788156, 0.05404445298102276,
    0.8927917173031028, 0.05459927181715188,
    0.11609418623959387, 0.06770457499335653,
    0.816329898230122, 0.06610481315872037,
    0.7289382750719208, 0.07528168933109193,
    0.1949337600658861, 0.07523875439336628,
    0.6202464762242526, 0.08078128528008774,
    0.29452054396815375, 0.08132829973053322,
    0.3979119932887618, 0.08244356248919947,
    0.5137217401713898, 0.08228116276713907,
    0.011490060354693344, 0.0995006159938827,
    0.8871823364736069, 0.10373290459929096,
    0.06770457499411627, 0.1160941862391005,
    0.8161006488253324, 0.11469103662389256,
    0.12992210076692337, 0.12992210076787283,
    0.7402466132671435, 0.1303181240815853,
    0.21295151599816647, 0.1474120786753819,
    0.64058464150144, 0.14719431298566774,
    0.5337997634820086, 0.15585308916316773,
    0.3124268280909036, 0.15575241420813873,
    0.42015226832261326, 0.16195178916770422,
    0.01675498677276444, 0.17840460489174426,
    0.8004069682791456, 0.1798306684955831,
    0.7297743599583134, 0.1961391727335674,
    0.07523875439307798, 0.19493376006631832,
    0.6389919816077548, 0.21101818683484633,
    0.14741207867524778, 0.21295151599767934,
    0.22537391838182275, 0.2253739183829275,
    0.5459661886321194, 0.2271323213568454,
    0.43063849352185357, 0.23302244832947985,
    0.331545057160622, 0.23533405570225027,
    0.7105476307131041, 0.27591543425694426,
    0.015673726460752498, 0.2700709199668019,
    0.08132829973228976, 0.2945205439698699,
    0.6222279673988571, 0.29521709498009574,
    0.1557524142084471, 0.31242682809080013,
    0.5335147601281699, 0.31230587275798316,
    0.23533405570247046, 0.3315450571632464,
    0.4336587687918523, 0.33183267990052934,
    0.33423924438111025, 0.33423924438174296,
    0.6010731959689967, 0.3795167344899901,
    0.017051849922903158, 0.37523946585119855,
    0.08244356248650309, 0.397911993291638,
    0.5162583249626537, 0.4011004458321267,
    0.41753778455383395, 0.4175377845506519,
    0.16195178916797626, 0.4201522683231072,
    0.33183267990072135, 0.4336587687898878,
    0.23302244833102445, 0.4306384935251232,
    0.49249750085617466, 0.492497500855745,
    0.0168637961814894, 0.4859607225988399,
    0.401100445831252, 0.5162583249631958,
    0.08228116276828262, 0.5137217401718339,
    0.15585308916250706, 0.5337997634819861,
    0.31230587275801464, 0.5335147601279179,
    0.22713232135637257, 0.5459661886332541,
    0.37951673449070544, 0.6010731959685234,
    0.017312747455579345, 0.5963621636304516,
    0.08078128527708066, 0.6202464762231144,
    0.29521709497936066, 0.6222279673988252,
    0.2110181868372166, 0.638991981607487,
    0.14719431298429175, 0.6405846415012362,
    0.01499917851203294, 0.7046515778466711,
    0.27591543425731485, 0.7105476307117395,
    0.07528168933117432, 0.7289382750712794,
    0.19613917273451742, 0.7297743599567582,
    0.1303181240804344, 0.7402466132673082,
    0.0174791195940884, 0.7980888478864682,
    0.17983066849545473, 0.8004069682797105,
    0.11469103662439588, 0.8161006488250164,
    0.06610481315795808, 0.8163298982296718,
    0.10373290460162045, 0.8871823364730586,
    0.011280135401291259, 0.8831805213847821,
    0.054599271818467736, 0.8927917173033225,
    0.04434392198999209, 0.9385320881574503,
    0.011426703009619423, 0.9384823065934791,
    0.008018482493442154, 0.9867082500426098,
};

}  // namespace

NodeTable node_table(int order)
{
    switch (order) {
    case 1: return {kNodes1, 2};
    case 2: return {kNodes2, 4};
    case 3: return {kNodes3, 5};
    case 4: return {kNodes4, 7};
    case 5: return {kNodes5, 8};
    case 6: return {kNodes6, 8};
    case 7: return {kNodes7, 11};
    case 8: return {kNodes8, 11};
    case 9: return {kNodes9, 12};
    case 10: return {kNodes10, 13};
    case 11: return {kNodes11, 13};
    case 12: return {kNodes12, 14};
    default: return {nullptr, 0};
    }
}

}  // namespace lbie::detail
