#include "sepcore/tw_table.hpp"

namespace sepcore::stats::detail {

// F_1(s) for s = -10 + 0.01 k, k = 0..1600.
const double kTw1Cdf[kTw1Count] = {
    3.1588659399337863e-22, 3.6195485897199506e-22, 4.1462072489802082e-22, 4.7483007012712647e-22,
    5.4368530577038574e-22, 6.2229532247473572e-22, 7.1214162901421079e-22, 8.1472054483516156e-22,
    9.3185826803520483e-22, 1.0655696130934722e-21, 1.2181343779323195e-21, 1.3922376113252649e-21,
    1.5907711788012983e-21, 1.8172282478206011e-21, 2.0753108606418563e-21, 2.3695052107012633e-21,
    2.7047421418653596e-21, 3.0864971124502121e-21, 3.5213891212435138e-21, 4.0165199497400615e-21,
    4.5801261575545686e-21, 5.2213885239978122e-21, 5.9511157290197524e-21, 6.7811835727640339e-21,
    7.7248398586587582e-21, 8.7977228141603094e-21, 1.0017331445079618e-20, 1.140293955460547e-20,
    1.2976977548158567e-20, 1.4764878195147737e-20, 1.6794325319073383e-20, 1.909844128672598e-20,
    2.1713313955817829e-20, 2.4679941633702831e-20, 2.8045082990077272e-20, 3.1861311264879761e-20,
    3.6187433685052814e-20, 4.1090783731566677e-20, 4.6647678118279452e-20, 5.2943378822761943e-20,
    6.0072470516040725e-20, 6.814525459500286e-20, 7.7284930496909234e-20, 8.7628237443105484e-20,
    9.9331690543223941e-20, 1.1257068253902721e-19, 1.2754256965718411e-19, 1.4447049714783287e-19,
    1.6360515694875088e-19, 1.8522990317169695e-19, 2.0966144153028784e-19, 2.3725727834038765e-19,
    2.6842123777883977e-19, 3.0360355954124179e-19, 3.4331503975289429e-19, 3.881257593804101e-19,
    4.3867944241861847e-19, 4.9569976173430646e-19, 5.5999509572435952e-19, 6.3247445357110314e-19,
    7.1417020396129777e-19, 8.0621705395897067e-19, 9.0991197926901408e-19, 1.0266974669959775e-18,
    1.1581906066751603e-18, 1.3062166308194248e-18, 1.4728064775992267e-18, 1.6602429825376464e-18,
    1.8710851642429582e-18, 2.1082079551195503e-18, 2.3748106923676261e-18, 2.6744926846886314e-18,
    3.0112706194642847e-18, 3.3896532082041858e-18, 3.8146671882855375e-18, 4.2919650191453846e-18,
    4.8278380156157995e-18, 5.4293197071963688e-18, 6.1043184432580326e-18, 6.8615780392624374e-18,
    7.7109999764208705e-18, 8.6634941232739039e-18, 9.731376606673707e-18, 1.0928316114517521e-17,
    1.2269596783274229e-17, 1.3772252000040738e-17, 1.5455311340665472e-17, 1.7340005904053395e-17,
    1.9449956240421918e-17, 2.1811552484491933e-17, 2.4454182001453301e-17, 2.7410590622891455e-17,
    3.0717263833127225e-17, 3.4414786340145714e-17, 3.8548483475028567e-17, 4.3168648098373927e-17,
    4.8331368670001912e-17, 5.4098922219202215e-17, 6.054069076869929e-17, 6.773392353243283e-17,
    7.5764250490192752e-17, 8.4727104054221252e-17, 9.4728404418295156e-17, 1.0588595872856949e-16,
    1.1833033693343968e-16, 1.3220688850605963e-16, 1.4767687339791088e-16, 1.6491916966537689e-16,
    1.8413267564518043e-16, 2.0553723735788556e-16, 2.2937762343613096e-16, 2.559249662081117e-16,
    2.8547965299782903e-16, 3.1837468468910842e-16, 3.5497935541547176e-16, 3.9570262243257771e-16,
    4.4099757168730619e-16, 4.9136570061868499e-16, 5.4736241448509041e-16, 6.0960300972862784e-16,
    6.7876702885682727e-16, 7.5560793361979106e-16, 8.4095765628409614e-16, 9.3573728772140445e-16,
    1.0409644272477178e-15, 1.1577643067704403e-15, 1.2873804076793597e-15, 1.4311862951472531e-15,
    1.5906998338990433e-15, 1.7675955435981859e-15, 1.9637237919234472e-15, 2.1811272245202646e-15,
    2.4220585158107108e-15, 2.6890037204097228e-15, 2.984705808167035e-15, 3.3121886349814363e-15,
    3.6747860001587597e-15, 4.076173455919349e-15, 4.5204016031026329e-15, 5.011931598769597e-15,
    5.5556809972379489e-15, 6.1570605929502741e-15, 6.8220317400954331e-15, 7.5571535493040175e-15,
    8.3696482476417525e-15, 9.2674567447530872e-15, 1.0259320015544668e-14, 1.1354846062409336e-14,
    1.2564599739084954e-14, 1.3900198326464226e-14, 1.5374406701293104e-14, 1.7001249592608496e-14,
    1.8796134777191511e-14, 2.0775983306850867e-14, 2.2959375028492772e-14, 2.5366703037363501e-14,
    2.8020356688309973e-14, 3.0944899739123471e-14, 3.416727665140689e-14, 3.7717038622699825e-14,
    4.1626600402859117e-14, 4.5931482444983207e-14, 5.067061977901569e-14, 5.5886695990874757e-14,
    6.1626448091216056e-14, 6.7941081836469304e-14, 7.4886660949544039e-14, 8.2524587965028438e-14,
    9.0922035904617331e-14, 1.0015254860051202e-13, 1.1029656925229978e-13, 1.2144209370603261e-13,
    1.3368536322621392e-13, 1.4713159511969266e-13, 1.618958039421228e-13, 1.7810369690993874e-13,
    1.9589261676794503e-13, 2.1541259938331156e-13, 2.3682749564958784e-13, 2.6031624480370531e-13,
    2.8607416834873263e-13, 3.143144395488364e-13, 3.4526969702119219e-13, 3.7919371207248196e-13,
    4.1636329989426724e-13, 4.570803078488977e-13, 5.0167382212039517e-13, 5.5050254937682521e-13,
    6.0395739332454623e-13, 6.6246428688840489e-13, 7.264870976425807e-13, 7.9653112567447055e-13,
    8.7314646772181819e-13, 9.5693194599610854e-13, 1.0485393165561531e-12, 1.1486777701933664e-12,
    1.258118793784042e-12, 1.377701443051642e-12, 1.5083381727818754e-12, 1.6510209741933466e-12,
    1.8068280004004458e-12, 1.9769309374688126e-12, 2.1626027979197136e-12, 2.3652263080302341e-12,
    2.5863031950516148e-12, 2.8274638397736993e-12, 3.0904781796018018e-12, 3.3772671315887765e-12,
    3.6899149910631504e-12, 4.0306828949141515e-12, 4.4020232246457992e-12, 4.8065953743678118e-12,
    5.2472824412292146e-12, 5.7272094602490253e-12, 6.2497629838229079e-12, 6.8186122574913546e-12,
    7.4377317619482603e-12, 8.1114259127465794e-12, 8.8443553134909464e-12, 9.6415654623728326e-12,
    1.0508516761802463e-11, 1.1451118103346825e-11, 1.247576190013124e-11, 1.3589362393852932e-11,
    1.4799396647634553e-11, 1.6113948533991628e-11, 1.7541756269588919e-11, 1.9092263593749552e-11,
    2.0775674034757947e-11, 2.2603010301172329e-11, 2.458617739357806e-11, 2.6738030461712844e-11,
    2.9072447663785684e-11, 3.1604408634093436e-11, 3.4350078519842021e-11, 3.7326898042209994e-11,
    4.0553680618018155e-11, 4.4050715629590582e-11, 4.7839879744627665e-11, 5.1944757381326737e-11,
    5.6390766608148086e-11, 6.1205298260032046e-11, 6.6417861473025225e-11, 7.206024155626093e-11,
    7.8166668561630849e-11, 8.4773997261756828e-11, 9.1921900975317987e-11, 9.9653077890806323e-11,
    1.0801347213707388e-10, 1.1705251080768796e-10, 1.2682335727280153e-10, 1.3738318100479045e-10,
    1.487934479850944e-10, 1.6112022988744166e-10, 1.7443453391424808e-10, 1.8881265683287596e-10,
    2.0433656245372463e-10, 2.2109428352091651e-10, 2.3918035349966117e-10, 2.5869626527679868e-10,
    2.7975096034748516e-10, 3.024613545967405e-10, 3.269528930111664e-10, 3.5336014876092145e-10,
    3.8182745528495912e-10, 4.1250958380841517e-10, 4.4557246631783532e-10, 4.8119396132809703e-10,
    5.1956467663247429e-10, 5.6088884012281731e-10, 6.0538522952562946e-10, 6.5328816303572048e-10,
    7.0484855016279509e-10, 7.603350179052708e-10, 8.2003509899410328e-10, 8.8425650477605082e-10,
    9.5332847735937903e-10, 1.0276032184780225e-09, 1.107457424926755e-09, 1.193293906961962e-09,
    1.2855433146686969e-09, 1.3846659708263263e-09, 1.4911538180991173e-09, 1.6055324880613824e-09,
    1.7283634955465263e-09, 1.8602465712870933e-09, 2.0018221389362681e-09, 2.1537739369763859e-09,
    2.3168318099795808e-09, 2.4917746610839938e-09, 2.6794335874575717e-09, 2.8806952054901825e-09,
    3.0965051728518184e-09, 3.3278719294877809e-09, 3.575870642781171e-09, 3.8416474126415315e-09,
    4.1264237051551412e-09, 4.4315010598732197e-09, 4.7582660697567969e-09, 5.1081956454525312e-09,
    5.4828626015981777e-09, 5.8839415603494004e-09, 6.3132151835631949e-09, 6.772580797020421e-09,
    7.2640573566416952e-09, 7.7897928405587143e-09, 8.3520720610528981e-09, 8.9533248915802809e-09,
    9.5961350085930487e-09, 1.0283249073872915e-08, 1.1017586471827517e-08, 1.1802249570133745e-08,
    1.2640534561362502e-08, 1.3535942896807514e-08, 1.4492193368111587e-08, 1.551323483305737e-08,
    1.6603259653882836e-08, 1.7766717869444882e-08, 1.9008332132298821e-08, 2.0333113452006371e-08,
    2.1746377797182775e-08, 2.3253763594434148e-08, 2.4861250132882982e-08, 2.6575176998690955e-08,
    2.8402264488624647e-08, 3.0349635148403597e-08, 3.2424836421348335e-08, 3.4635864479424608e-08,
    3.6991189321688165e-08, 3.9499781155808054e-08, 4.217113816296833e-08, 4.5015315674166911e-08,
    4.8042956877382318e-08, 5.1265325058483605e-08, 5.4694337516046252e-08, 5.8342601150975639e-08,
    6.2223449937692592e-08, 6.6350984181745746e-08, 7.0740111789249924e-08, 7.5406591630556691e-08,
    8.0367078975927313e-08, 8.5639173226129457e-08, 9.1241468010614785e-08, 9.7193603691603784e-08,
    1.0351632246563013e-07, 1.1023152612431298e-07, 1.1736233659196326e-07, 1.2493315943633896e-07,
    1.3296975036005054e-07, 1.4149928490863841e-07, 1.5055043142949693e-07, 1.6015342758962213e-07,
    1.703401603811464e-07, 1.8114424990879655e-07, 1.9260113715875704e-07, 2.0474817573303618e-07,
    2.1762472791910948e-07, 2.3127226508673558e-07, 2.4573447276513237e-07, 2.6105736051007815e-07,
    2.7728937663280304e-07, 2.944815282724733e-07, 3.126875068027033e-07, 3.3196381878226446e-07,
    3.5236992283495013e-07, 3.7396837254115302e-07, 3.9682496563456727e-07, 4.2100889976179656e-07,
    4.4659293506177436e-07, 4.7365356372480203e-07, 5.0227118700544804e-07, 5.3253029974002917e-07,
    5.6451968288966389e-07, 5.9833260415490312e-07, 6.3406702718502633e-07, 6.7182582958195416e-07,
    7.1171703007805403e-07, 7.5385402517184391e-07, 7.9835583563377805e-07, 8.4534736312023468e-07,
    8.9495965746424212e-07, 9.473301948685233e-07, 1.00260316724507e-06, 1.0609297836258655e-06,
    1.1224685833656337e-06, 1.1873857620725715e-06, 1.255855510530687e-06, 1.3280603670095208e-06,
    1.4041915834831373e-06, 1.4844495062552529e-06, 1.5690439712733455e-06, 1.6581947150642547e-06,
    1.752131801242154e-06, 1.8510960635635407e-06, 1.9553395658792706e-06, 2.0651260793611153e-06,
    2.1807315780164131e-06, 2.3024447525879454e-06, 2.4305675436839734e-06, 2.5654156947889976e-06,
    2.7073193255566912e-06, 2.8566235261215309e-06, 3.0136889731452197e-06, 3.1788925682929272e-06,
    3.3526280994510762e-06, 3.5353069258361213e-06, 3.7273586876077807e-06, 3.9292320402591444e-06,
    4.1413954151520931e-06, 4.3643378065913696e-06, 4.5985695861329197e-06, 4.8446233451082945e-06,
    5.103054766263445e-06, 5.3744435247436793e-06, 5.6593942199628925e-06, 5.9585373387050943e-06,
    6.2725302506507347e-06, 6.6020582367487674e-06, 6.9478355517567177e-06, 7.3106065217492093e-06,
    7.6911466771752644e-06, 8.0902639228711103e-06, 8.5087997456551834e-06, 8.9476304604836876e-06,
    9.4076684962321571e-06, 9.8898637221070297e-06, 1.0395204815497649e-05, 1.0924720672440878e-05,
    1.1479481861569522e-05, 1.2060602122965585e-05, 1.2669239912203914e-05, 1.3306599991535314e-05,
    1.3973935068530257e-05, 1.4672547483828519e-05, 1.5403790948550272e-05, 1.616907233295348e-05,
    1.6969853507219849e-05, 1.7807653235277479e-05, 1.8684049123363918e-05, 1.9600679623712714e-05,
    2.0559246095277512e-05, 2.1561514921901968e-05, 2.2609319689701964e-05, 2.3704563424317738e-05,
    2.4849220889910179e-05, 2.6045340949790867e-05, 2.7295048991613377e-05, 2.8600549416502162e-05,
    2.9964128194692349e-05, 3.1388155488018448e-05, 3.2875088340856704e-05, 3.4427473440414667e-05,
    3.6047949947650627e-05, 3.7739252400177445e-05, 3.9504213687967806e-05, 4.1345768103238421e-05,
    4.3266954465595083e-05, 4.5270919323468031e-05, 4.7360920233480685e-05, 4.9540329118131142e-05,
    5.1812635703027394e-05, 5.4181451035902287e-05, 5.665051108661622e-05, 5.9223680430679044e-05,
    6.1904956016832317e-05, 6.4698471019598904e-05, 6.7608498778106281e-05, 7.063945682201568e-05,
    7.3795910985523813e-05, 7.708257961039499e-05, 8.0504337838850049e-05, 8.4066221997748815e-05,
    8.7773434073788877e-05, 9.1631346282118991e-05, 9.5645505727549421e-05, 9.9821639160275371e-05,
    0.00010416565782641356, 0.00010868366241448674, 0.00011338194809678652, 0.00011826700966958749,
    0.00012334554678907885, 0.00012862446930583224, 0.0001341109026982155, 0.00013981219360360812,
    0.00014573591544967136, 0.00015188987418482503, 0.00015828211410862594, 0.00016492092380235976,
    0.00017181484215958762, 0.00017897266451752221, 0.00018640344888769676, 0.00019411652228872142,
    0.00020212148717747608, 0.00021042822798175706, 0.00021904691773227429, 0.00022798802479363027,
    0.00023726231969649336, 0.00024688088206579768, 0.0002568551076498213, 0.0002671967154448224,
    0.00027791775491818035, 0.00028903061332708694, 0.00030054802313241068, 0.00031248306950757055,
    0.00032484919794014517, 0.0003376602219265559, 0.00035093033075708161, 0.00036467409739118339,
    0.00037890648642089183, 0.00039364286212142865, 0.00040889899658681886, 0.00042469107794929935,
    0.0004410357186805356, 0.00045794996397251393, 0.00047545130019726142, 0.00049355766344108217,
    0.00051228744811311904, 0.00053165951562532518, 0.00055169320314130013, 0.00057240833239098198,
    0.00059382521854915954, 0.00061596467917525064, 0.00063884804321093463, 0.00066249716003210677,
    0.00068693440855392609, 0.00071218270638352937, 0.00073826551901849202, 0.000765206869087506,
    0.00079303134562823884, 0.00082176411340084384, 0.00085143092223185352, 0.00088205811638475407,
    0.00091367264395335269, 0.00094630206627365323, 0.00097997456735080001, 0.0010147189632942445,
    0.0010505647117598357, 0.0010875419213917897, 0.0011256813612609336, 0.0011650144702931256,
    0.0012055733666853389, 0.001247390857300966, 0.0012905004470413527, 0.0013349363481881746,
    0.0013807334897101375, 0.0014279275265289628, 0.0014765548487390987, 0.0015266525907754516,
    0.0015782586405229712, 0.0016314116483612622, 0.0016861510361409601, 0.0017425170060818582,
    0.0018005505495892553, 0.0018602934559812227, 0.0019217883211200288, 0.001985078555942126,
    0.0020502083948781029, 0.002117222904158382, 0.0021861679899958224, 0.0022570904066391978,
    0.0023300377642903373, 0.0024050585368785913, 0.0024822020696830325, 0.0025615185867995916,
    0.0026430591984408819, 0.002726875908065151, 0.002813021619325323, 0.002901550142830835,
    0.0029925162027147597, 0.0030859754430004171, 0.003181984433755493, 0.0032806006770322916,
    0.0033818826125811973, 0.0034858896233322429, 0.0035926820406368561, 0.0037023211492621267,
    0.0038148691921291995, 0.003930389374789193, 0.0040489458696277023, 0.0041706038197923045,
    0.0042954293428321289, 0.0044234895340460479, 0.0045548524695278392, 0.0046895872089034269,
    0.0048277637977517654, 0.0049694532697015939, 0.0051147276481969895, 0.0052636599479248111,
    0.0054163241758947286, 0.0055727953321680736, 0.0057331494102238747, 0.0058974633969593841,
    0.0060658152723140814, 0.0062382840085139354, 0.0064149495689254845, 0.0065958929065159013,
    0.0067811959619109947, 0.0069709416610440273, 0.0071652139123910873, 0.0073640976037843081,
    0.0075676785987984635, 0.0077760437327039919, 0.0079892808079819536, 0.0082074785893921226,
    0.008430726798593623, 0.0086591161083070939, 0.0088927381360184125, 0.0091316854372144509,
    0.0093760514981496759, 0.0096259307281359192, 0.0098814184513540525, 0.010142610898179479,
    0.010409605196021203, 0.010682499359667329, 0.010961392281136946, 0.011246383719030008,
    0.011537574287378687, 0.011835065443990357, 0.012138959478284283, 0.01244935949861822,
    0.012766369419101664, 0.013090093945895068, 0.01342063856299385, 0.013758109517492869,
    0.014102613804334538, 0.014454259150535458, 0.014813153998894326, 0.015179407491178666,
    0.015553129450790858, 0.015934430364914473, 0.016323421366140779, 0.016720214213576563,
    0.017124921273432878, 0.01753765549910024, 0.01795853041070598, 0.018387660074162128,
    0.018825159079700494, 0.019271142519902626, 0.019725725967223776, 0.020189025451015717,
    0.020661157434053151, 0.0211422387885646, 0.021632386771775872, 0.02213171900096695,
    0.022640353428049688, 0.023158408313670636, 0.023686002200844637, 0.024223253888124546,
    0.024770282402314429, 0.025327206970730216, 0.0258941469930196, 0.026471222012539996,
    0.027058551687312766, 0.02765625576055061, 0.028264454030773864, 0.02888326632152111,
    0.029512812450662222, 0.030153212199324184, 0.030804585280437745, 0.031467051306916079,
    0.032140729759473456, 0.032825739954095108, 0.033522201009167751, 0.034230231812284143,
    0.034949950986728692, 0.035681476857658663, 0.036424927417990631, 0.037180420294004549,
    0.037948072710678453, 0.038728001456764263, 0.039520322849618247, 0.040325152699799277,
    0.04114260627544733, 0.041972798266456224, 0.042815842748451474, 0.043671853146591819,
    0.044540942199204112, 0.045423221921266146, 0.046318803567754765, 0.047227797596870312,
    0.048150313633153523, 0.04908646043050989, 0.0500363458351566, 0.051000076748505589,
    0.051977759090001609, 0.052969497759925599, 0.053975396602184401, 0.054995558367097679,
    0.056030084674202785, 0.057079075975087865, 0.058142631516273788, 0.059220849302160615,
    0.060313826058050267, 0.06142165719326844, 0.062544436764396527, 0.063682257438632137,
    0.064835210457295761, 0.066003385599496395, 0.067186871145977614, 0.068385753843156205,
    0.069600118867370178, 0.070830049789357155, 0.072075628538972952, 0.073336935370172052,
    0.074614048826263435, 0.075907045705458448, 0.077216001026729653, 0.078540987995990699,
    0.079882077972621077, 0.081239340436346466, 0.082612842954490159, 0.084002651149616511,
    0.085408828667575376, 0.086831437145969512, 0.088270536183055429, 0.089726183307094365,
    0.091198433946171359, 0.092687341398491316, 0.094192956803174507, 0.095715329111557931,
    0.097254505059024943, 0.098810529137368541, 0.10038344356771342, 0.10197328827399593,
    0.10358010085703329, 0.10520391656917631, 0.10684476828957468, 0.10850268650005965,
    0.1101776992616534, 0.11186983219172819, 0.113579108441818, 0.11530554867609659,
    0.11704917105053358, 0.11880999119274364, 0.1205880221825309, 0.1223832745331484,
    0.12419575617327558, 0.12602547242972845, 0.12787242601090734, 0.1297366169909977,
    0.13161804279492487, 0.13351669818407921, 0.1354325752428116, 0.13736566336571557,
    0.13931594924569743, 0.1412834168628419, 0.14326804747408223, 0.1452698196036816,
    0.14728870903452679, 0.14932468880024477, 0.1513777291781461, 0.1534477976829961,
    0.15553485906162551, 0.15763887528837781, 0.15975980556139707, 0.16189760629976674,
    0.16405223114149253, 0.166223630942338, 0.16841175377551296, 0.17061654493221667,
    0.17283794692303386, 0.1750758994801907, 0.17733033956066557, 0.17960120135015445,
    0.18188841626789617, 0.1841919129723496, 0.18651161736772637, 0.18884745261137459,
    0.19119933912201251, 0.19356719458881322, 0.19595093398132785, 0.19835046956025587,
    0.20076571088904974, 0.20319656484635629, 0.2056429356392839, 0.20810472481749703,
    0.21058183128812891, 0.21307415133150998, 0.21558157861769944, 0.21810400422382395,
    0.22064131665220871, 0.22319340184929634, 0.22576014322534529, 0.22834142167490676,
    0.23093711559805896, 0.23354710092240127, 0.2361712511257974, 0.23880943725985707,
    0.24146152797414328, 0.24412738954110519, 0.24680688588171548, 0.24949987859181158,
    0.25220622696912093, 0.25492578804097027, 0.25765841659265565, 0.26040396519647308,
    0.26316228424139004, 0.26593322196335156, 0.26871662447619898, 0.27151233580321016,
    0.27432019790921636, 0.27714005073331605, 0.27997173222214949, 0.28281507836372966,
    0.28566992322181745, 0.28853609897082222, 0.29141343593121727, 0.29430176260545599,
    0.29720090571437507, 0.30011069023406362, 0.30303093943319792, 0.305961474910808,
    0.3089021166344797, 0.31185268297896462, 0.31481299076519048, 0.31778285529964617,
    0.320762090414141, 0.32375050850591436, 0.32674792057807162, 0.32975413628035488,
    0.33276896395020406, 0.33579221065411308, 0.33882368222925985, 0.34186318332538868,
    0.34491051744693801, 0.34796548699538893, 0.35102789331182682, 0.35409753671969313,
    0.35717421656771708, 0.36025773127300487, 0.36334787836428017, 0.36644445452524627,
    0.36954725563807, 0.37265607682695656, 0.37577071250181265, 0.37889095640196918,
    0.38201660163996126, 0.38514744074533636, 0.38828326570848892, 0.39142386802449264,
    0.39456903873692717, 0.3977185684816712, 0.40087224753066131, 0.40402986583558886,
    0.40719121307152761, 0.41035607868047025, 0.41352425191477166, 0.41669552188046988,
    0.41986967758047716, 0.42304650795762999, 0.42622580193757703, 0.42940734847149531,
    0.43259093657862491, 0.43577635538859338, 0.43896339418353747, 0.44215184243999056,
    0.44534148987053557, 0.44853212646520185, 0.45172354253259883, 0.45491552874077101,
    0.45810787615776144, 0.46130037629187942, 0.4644928211316442, 0.46768500318541195,
    0.47087671552066412, 0.47406775180294153, 0.47725790633443005, 0.48044697409216303,
    0.48363475076585943, 0.48682103279535638, 0.49000561740765175, 0.49318830265353014,
    0.49636888744377455, 0.49954717158494344, 0.50272295581471105, 0.50589604183676717,
    0.50906623235525117, 0.51223333110872993, 0.51539714290370386, 0.51855747364762783,
    0.52171413038145131, 0.52486692131166202, 0.52801565584183019, 0.53116014460363881,
    0.53430019948741037, 0.5374356336721029, 0.54056626165478838, 0.54369189927959072,
    0.5468123637660941, 0.5499274737372063, 0.55303704924646768, 0.5561409118048245,
    0.55923888440682923, 0.56233079155628951, 0.56541645929135054, 0.56849571520901221,
    0.5715683884890721, 0.5746343099174952, 0.57769331190920969, 0.58074522853031663,
    0.58378989551973026, 0.58682715031021859, 0.58985683204887307, 0.59287878161698071,
    0.595892841649317, 0.5988988565528417, 0.60189667252481016, 0.60488613757028831,
    0.6078671015190833, 0.61083941604208047, 0.61380293466698299, 0.61675751279347313,
    0.61970300770777442, 0.62263927859662216, 0.62556618656066054, 0.62848359462723147,
    0.63139136776260285, 0.63428937288358089, 0.63717747886857823, 0.64005555656806656,
    0.6429234788144782, 0.64578112043151592, 0.64862835824290022, 0.65146507108053875,
    0.65429113979213405, 0.65710644724822909, 0.65991087834868756, 0.66270432002862001,
    0.66548666126376077, 0.66825779307528588, 0.67101760853410075, 0.67376600276457344,
    0.67650287294773725, 0.67922811832396668, 0.68194164019511394, 0.68464334192613496,
    0.6873331289461917, 0.69001090874924598, 0.69267659089413924, 0.6953300870041812,
    0.69797131076622931, 0.7006001779292923, 0.70321660630263538, 0.70582051575341564,
    0.70841182820383575, 0.71099046762783857, 0.71355636004733869, 0.71610943352799272,
    0.7186496181745281, 0.72117684612562849, 0.72369105154837998, 0.7261921706322918,
    0.72868014158289107, 0.73115490461490551, 0.73361640194503519, 0.73606457778431789,
    0.73849937833011037, 0.74092075175766392, 0.74332864821133759, 0.74572301979542133,
    0.74810382056460167, 0.75047100651406073, 0.75282453556922924, 0.75516436757518157,
    0.75749046428571054, 0.75980278935205214, 0.76210130831129741, 0.76438598857448392,
    0.76665679941437992, 0.76891371195295966, 0.77115669914859752, 0.77338573578295677,
    0.77560079844761265, 0.77780186553039765, 0.77998891720147934, 0.78216193539918111,
    0.78432090381555308, 0.7864658078817055, 0.78859663475289055, 0.79071337329336899,
    0.79281601406105318, 0.79490454929192733, 0.79697897288427111, 0.79903928038267802,
    0.80108546896188226, 0.80311753741039604, 0.80513548611397301, 0.80713931703890351,
    0.80912903371513434, 0.81110464121923687, 0.81306614615723016, 0.81501355664725061,
    0.81694688230208889, 0.81886613421160048, 0.82077132492498439, 0.82266246843295188,
    0.82453958014978501, 0.82640267689528313, 0.82825177687662643, 0.83008689967013505,
    0.8319080662029511, 0.83371529873464389, 0.83550862083873789, 0.837288057384177,
    0.83905363451673376, 0.8408053796403604, 0.84254332139849319, 0.84426748965531273,
    0.84597791547697532, 0.84767463111280872, 0.84935766997648143, 0.85102706662716365,
    0.85268285675066113, 0.85432507714054884, 0.85595376567930248, 0.85756896131943161,
    0.85917070406461715, 0.8607590349508647, 0.8623339960276788, 0.86389563033925509,
    0.86544398190570215, 0.86697909570429421, 0.86850101765076571, 0.87000979458064009,
    0.87150547423061675, 0.87298810521999304, 0.87445773703215279, 0.87591441999610919,
    0.87735820526811858, 0.87878914481334736, 0.8802072913876211, 0.88161269851925383,
    0.883005420490939, 0.88438551232173979, 0.88575302974915948, 0.88710802921129961,
    0.8884505678291208, 0.88978070338878346, 0.8910984943241127, 0.89240399969914375,
    0.89369727919078656, 0.89497839307159821, 0.8962474021926693, 0.89750436796661659,
    0.8987493523507073, 0.8999824178300968, 0.90120362740118243, 0.90241304455510829,
    0.90361073326136554, 0.90479675795154757, 0.90597118350323269, 0.90713407522399891,
    0.90828549883557441, 0.90942552045813019, 0.91055420659472697, 0.91167162411587643,
    0.91277784024427855, 0.91387292253968533, 0.91495693888391627, 0.91602995746604321,
    0.91709204676769218, 0.91814327554853314, 0.91918371283189937, 0.92021342789057636,
    0.92123249023274467, 0.92224096958807589, 0.92323893589399619, 0.92422645928210434,
    0.92520361006475127, 0.92617045872178494, 0.92712707588746068, 0.92807353233749679,
    0.92900989897632713, 0.92993624682448928, 0.93085264700619097, 0.93175917073704018,
    0.93265588931194587, 0.93354287409318371, 0.93442019649861696, 0.93528792799011296,
    0.93614614006209251, 0.93699490423027509, 0.93783429202057889, 0.93866437495819066,
    0.93948522455680894, 0.94029691230803736, 0.94109950967097999, 0.94189308806196326,
    0.9426777188444605, 0.94345347331916019, 0.94422042271421136, 0.94497863817563577,
    0.94572819075790859, 0.94646915141468846, 0.94720159098974011, 0.94792558020799367,
    0.94864118966679312, 0.94934848982728726, 0.95004755100600058, 0.95073844336655344,
    0.95142123691154989, 0.9520960014746338, 0.95276280671268532, 0.95342172209819798,
    0.95407281691180035, 0.95471616023494232, 0.95535182094273441, 0.95597986769694476,
    0.95660036893914824, 0.95721339288403184, 0.95781900751285787, 0.95841728056706543,
    0.95900827954203505, 0.95959207168099503, 0.96016872396908592, 0.96073830312755759,
    0.96130087560812971, 0.96185650758747721, 0.96240526496188372, 0.9629472133420115,
    0.96348241804783752, 0.96401094410370869, 0.96453285623354434, 0.96504821885618441,
    0.96555709608086382, 0.96605955170281477, 0.96655564919902204, 0.96704545172409762,
    0.967529022106283, 0.96800642284359162, 0.96847771610007038, 0.96894296370219879,
    0.96940222713539337, 0.96985556754065716, 0.97030304571134485, 0.9707447220900326,
    0.97118065676554277, 0.97161090947004403, 0.97203553957630173, 0.97245460609503243,
    0.97286816767235562, 0.97327628258739352, 0.97367900874994284, 0.9740764036982853,
    0.97446852459708611, 0.97485542823541238, 0.97523717102484642, 0.97561380899771155,
    0.9759853978053894, 0.97635199271674844, 0.97671364861665999, 0.97707042000462263,
    0.97742236099347823, 0.9777695253082116, 0.97811196628486963, 0.97844973686954051,
    0.97878288961744575, 0.97911147669211396, 0.97943554986463366, 0.97975516051300693,
    0.98007035962157452, 0.9803811977805279, 0.98068772518550684, 0.98098999163727063,
    0.98128804654145019, 0.98158193890837919, 0.98187171735299572, 0.9821574300948237,
    0.98243912495802788, 0.98271684937152948, 0.98299065036920874, 0.98326057459015748,
    0.98352666827901702, 0.98378897728636983, 0.98404754706919839, 0.98430242269141177,
    0.98455364882442931, 0.98480126974782622, 0.98504532935003675, 0.98528587112912513,
    0.98552293819359615, 0.98575657326327593, 0.98598681867024407, 0.98621371635980448,
    0.98643730789153794, 0.98665763444037147, 0.98687473679771909, 0.9870886553726641,
    0.98729943019318611, 0.98750710090743854, 0.98771170678506115, 0.98791328671855383,
    0.98811187922466948, 0.98830752244586806, 0.98850025415179499, 0.98869011174081467,
    0.98887713224156559, 0.98906135231456116, 0.98924280825382183, 0.98942153598855054,
    0.98959757108482616, 0.98977094874734783, 0.98994170382118862, 0.99010987079360391,
    0.99027548379585206, 0.99043857660504608, 0.9905991826460413, 0.99075733499333662,
    0.99091306637301402, 0.99106640916469291, 0.99121739540351395, 0.99136605678214162,
    0.99151242465279299, 0.99165653002928267, 0.9917984035890951, 0.99193807567546344,
    0.99207557629948162, 0.99221093514222736, 0.99234418155689308, 0.99247534457095454,
    0.99260445288833099, 0.9927315348915754, 0.99285661864407049, 0.99297973189224509,
    0.993100902067792, 0.99322015628991056, 0.99333752136754327, 0.9934530238016408,
    0.99356668978742269, 0.99367854521665355, 0.99378861567992138, 0.99389692646893102,
    0.99400350257879899, 0.99410836871035735, 0.99421154927245436, 0.99431306838427624,
    0.99441294987765749, 0.99451121729940328, 0.99460789391361182, 0.99470300270400491,
    0.99479656637624736, 0.99488860736028406, 0.99497914781266728, 0.99506820961888875,
    0.99515581439570633, 0.99524198349348103, 0.99532673799849769, 0.99541009873530173,
    0.99549208626901553, 0.99557272090766957, 0.99565202270451736, 0.99573001146035545,
    0.99580670672583138, 0.9958821278037624, 0.99595629375143102, 0.99602922338288702,
    0.99610093527124699, 0.99617144775097255, 0.99624077892016427, 0.99630894664283298,
    0.99637596855116661, 0.99644186204779817, 0.99650664430805536, 0.99657033228221426,
    0.99663294269773361, 0.99669449206148886, 0.99675499666199108, 0.9968144725716106,
    0.99687293564876678, 0.99693040154013834, 0.99698688568283478, 0.99704240330658833,
    0.99709696943590342, 0.99715059889222191, 0.99720330629606568, 0.99725510606916856,
    0.99730601243660488, 0.99735603942889406, 0.99740520088410378, 0.9974535104499388,
    0.99750098158582312, 0.99754762756495463, 0.99759346147636718, 0.99763849622696699,
    0.99768274454356187, 0.99772621897487812, 0.99776893189355997, 0.99781089549816648,
    0.99785212181514138, 0.99789262270078294, 0.99793240984318965, 0.99797149476420666,
    0.99800988882134012, 0.99804760320967423, 0.99808464896376659, 0.99812103695953081,
    0.99815677791610879, 0.99819188239772672, 0.9982263608155314, 0.99826022342942655,
    0.99829348034988086, 0.99832614153972954, 0.99835821681596315, 0.99838971585149183,
    0.99842064817691101, 0.99845102318223877, 0.99848085011864829, 0.99851013810017752,
    0.99853889610543256, 0.99856713297927391, 0.99859485743448506, 0.99862207805343228,
    0.99864880328970052, 0.99867504146973096, 0.99870080079442702, 0.99872608934075435,
    0.99875091506332858, 0.99877528579598074, 0.99879920925331733, 0.99882269303226012,
    0.99884574461356834, 0.99886837136335993, 0.99889058053459934, 0.99891237926859378,
    0.99893377459644739, 0.99895477344052996, 0.99897538261591023, 0.99899560883178329,
    0.99901545869288622, 0.9990349387008941, 0.99905405525580282, 0.99907281465730446,
    0.99909122310613652, 0.99910928670543075, 0.99912701146203775, 0.99914440328784215,
    0.99916146800106298, 0.99917821132754325, 0.99919463890202009, 0.99921075626938705,
    0.99922656888593875, 0.99924208212060373, 0.99925730125616452, 0.9992722314904644,
    0.99928687793759996, 0.99930124562909484, 0.99931533951507778, 0.99932916446542652,
    0.99934272527090928, 0.99935602664431644, 0.99936907322157276, 0.99938186956283859,
    0.99939442015359936, 0.99940672940574515, 0.99941880165863062, 0.99943064118012837,
    0.99944225216766891, 0.99945363874926896, 0.99946480498454338, 0.99947575486571127,
    0.99948649231858244, 0.99949702120354278, 0.99950734531651475, 0.99951746838991662,
    0.99952739409360747, 0.99953712603581579, 0.99954666776406154, 0.99955602276606714,
    0.99956519447065295, 0.99957418624862748, 0.99958300141365941, 0.99959164322314487,
    0.99960011487906197, 0.99960841952881085, 0.9996165602660495, 0.99962454013150837,
    0.99963236211381568, 0.99964002915028261, 0.9996475441277024, 0.999654909883128,
    0.99966212920464104, 0.99966920483211463, 0.99967613945796052, 0.9996829357278707,
    0.99968959624154408, 0.99969612355341197, 0.99970252017334549, 0.99970878856735779,
    0.99971493115829657, 0.99972095032652397, 0.99972684841059389, 0.99973262770791194,
    0.99973829047539453, 0.99974383893011232, 0.9997492752499284, 0.9997546015741251,
    0.99975982000402697, 0.99976493260360866, 0.999769941400102, 0.99977484838458353,
    0.99977965551256709, 0.99978436470457654, 0.99978897784671905, 0.99979349679124341,
    0.99979792335709639, 0.99980225933046685, 0.99980650646532232, 0.99981066648394257,
    0.99981474107743884, 0.99981873190626891, 0.99982264060074888, 0.99982646876154579,
    0.99983021796017812, 0.99983388973949627, 0.99983748561416541, 0.99984100707113177,
    0.99984445557009105, 0.99984783254394516, 0.99985113939925185, 0.99985437751667272,
    0.99985754825140583, 0.99986065293362236, 0.99986369286888255, 0.99986666933856383,
    0.99986958360026756, 0.9998724368882248, 0.99987523041369708, 0.99987796536536822,
    0.99988064290973333, 0.99988326419148243, 0.9998858303338708, 0.99988834243909175,
    0.99989080158864163, 0.99989320884367872, 0.99989556524537249, 0.99989787181526002,
    0.99990012955557461, 0.9999023394495935, 0.99990450246196794, 0.99990661953904492,
    0.99990869160919282, 0.99991071958311306, 0.99991270435415947, 0.99991464679863362,
    0.99991654777609484, 0.99991840812965238, 0.99992022868625996, 0.99992201025700256,
    0.99992375363737129, 0.99992545960755841, 0.99992712893271107, 0.99992876236321659,
    0.99993036063495722, 0.99993192446957591, 0.99993345457472749, 0.99993495164433821,
    0.999936416358846, 0.99993784938544905, 0.99993925137834316, 0.99994062297896169,
    0.99994196481620112, 0.9999432775066559, 0.99994456165483614, 0.99994581785339753,
    0.999947046683348, 0.99994824871426558, 0.99994942450451485, 0.99995057460144043,
    0.9999516995415787, 0.99995279985085628, 0.99995387604478381, 0.99995492862865054,
    0.99995595809770965, 0.99995696493737274, 0.99995794962338591, 0.99995891262201264,
    0.99995985439020885, 0.99996077537579953, 0.99996167601764818, 0.99996255674582302,
    0.99996341798176769, 0.99996426013845574, 0.99996508362055647, 0.99996588882458948,
    0.9999666761390763, 0.99996744594469722, 0.99996819861443287, 0.99996893451371605,
    0.9999696540005738, 0.99997035742576679, 0.99997104513292778, 0.99997171745870039,
    0.99997237473287071, 0.99997301727849897, 0.99997364541205003, 0.99997425944351614,
    0.99997485967654642, 0.99997544640856528, 0.99997601993089269, 0.99997658052886751,
    0.99997712848195586, 0.99997766406386879, 0.99997818754267342, 0.99997869918090221,
    0.99997919923566336, 0.99997968795874159, 0.99998016559670466, 0.99998063239100632,
    0.9999810885780871, 0.9999815343894688, 0.99998197005185185, 0.99998239578721704,
    0.99998281181290649, 0.99998321834172488, 0.99998361558202509, 0.99998400373779706,
    0.99998438300875203, 0.99998475359041261, 0.99998511567418913, 0.99998546944746713,
    0.99998581509368378, 0.9999861527924071, 0.99998648271941604, 0.9999868050467724,
    0.99998711994289968, 0.99998742757264869, 0.99998772809737979, 0.99998802167502221,
    0.99998830846014919, 0.99998858860404616, 0.99998886225477424, 0.99998912955723551,
    0.99998939065323866, 0.99998964568156168, 0.99998989477801115, 0.99999013807548565,
    0.99999037570403104, 0.99999060779090188, 0.99999083446061698, 0.99999105583501469,
    0.99999127203331117, 0.99999148317214914, 0.99999168936565197, 0.99999189072547723,
    0.99999208736086798, 0.99999227937869617, 0.99999246688352295, 0.99999264997763315,
    0.99999282876109319, 0.99999300333178898, 0.99999317378547559, 0.99999334021582265,
    0.99999350271445109, 0.99999366137098444, 0.99999381627307982, 0.99999396750648162,
    0.99999411515505165, 0.99999425930081098, 0.99999440002397999, 0.99999453740301314,
    0.99999467151464194, 0.99999480243390249, 0.99999493023417863, 0.99999505498723296,
    0.9999951767632409, 0.99999529563082556, 0.99999541165709105, 0.99999552490765264,
    0.99999563544666836, 0.99999574333687147, 0.99999584863960067, 0.999995951414828,
    0.999996051721188, 0.99999614961600791, 0.99999624515533536, 0.99999633839396462,
    0.99999642938546218, 0.9999965181821947, 0.99999660483535857, 0.99999668939499553,
    0.99999677191002501, 0.9999968524282673, 0.99999693099646492, 0.99999700766030652,
    0.99999708246445096, 0.9999971554525483, 0.99999722666726032, 0.99999729615028521,
    0.9999973639423787, 0.99999743008336739, 0.99999749461217868, 0.99999755756685282,
    0.99999761898456563, 0.99999767890164748, 0.99999773735360109, 0.99999779437511782,
    0.99999785000010033, 0.99999790426167257, 0.99999795719220419, 0.99999800882332124,
    0.99999805918592788,
};

}  // namespace sepcore::stats::detail
