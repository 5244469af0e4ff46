"""Chebyshev tables (domain [0,1]) for the Riemann-Siegel correction
functions C0..C3, generated offline by a high-precision least-squares
fit of the main-sum remainder (tools/fit_rs_coeffs.py)."""

import numpy as np

C0_CHEB = np.array([ 6.4266728623976888e-01,-2.4227052612512389e-17, 2.7197299999785518e-01,-2.1992258045997024e-17,
  1.0738605819340321e-02, 9.7027281662609880e-17,-1.3743815296335697e-03, 7.6338247921566513e-18,
 -1.2468221880302386e-04, 2.6111647045947532e-18,-5.7645997042497174e-07, 6.8772295919140063e-17,
  2.7280674304986251e-07, 2.4334975930586590e-16, 8.0779531285003041e-09,-8.9310769015227042e-17,
 -2.0884602900927128e-10, 9.7544011130901881e-17,-1.3115365060856030e-11, 1.3601907878822542e-16,
 -1.4059626795904957e-14, 9.6998374743080632e-17, 1.0337990794195232e-14, 1.4762292819269971e-16,
  2.7010831564717574e-16, 8.1160275286365490e-17,-3.8500811945984994e-17, 2.6105978797764501e-16,
 -1.5468694093433417e-16, 8.4433700859182318e-17,-7.7154567938495666e-17,-1.9695243428339228e-16,
  1.3198292270107521e-16,-4.6502095555031479e-17,-1.5444746040476674e-16, 7.6607201460086145e-17,
 -5.4510868378152917e-17, 1.9616865313893021e-16,-1.9078803932353518e-16,-2.8279801082171074e-17,
 -2.3624074982156546e-16])
C1_CHEB = np.array([ 6.4033177724136933e-19, 1.0697913921003017e-02,-6.2261074027148187e-18, 1.7170651243377889e-02,
  1.1727519422074142e-17, 2.7932111497884736e-03, 2.1455990174611596e-18,-3.6375653719268669e-05,
  2.9651761673347572e-19,-2.7108955231126876e-05,-8.7379199832526877e-18,-1.0483749866675624e-06,
 -1.4663711882506250e-17, 5.8864671682887282e-08,-1.2033671324118047e-17, 4.3229672744311321e-09,
 -4.3683531683771028e-18,-1.1369578466147993e-11, 3.9358324036545223e-18,-6.6998248324974067e-12,
 -5.7683864212229700e-18,-1.0077284970410289e-13, 7.7649664589844253e-18, 5.1805158518473355e-15,
  9.5703907750872673e-18, 1.6907144308180599e-16, 1.5639897204239570e-17, 7.6732240343804988e-18,
  9.9530089145719518e-18,-2.8661536505520355e-18,-7.5824835709358493e-18, 1.4741822739267600e-17,
 -8.8322841975835262e-18,-1.0191630561406583e-17,-3.0283815765640540e-18, 4.7227523401555562e-18,
  4.1640246677755697e-18, 6.8108555225079852e-20,-5.2996677589870882e-18, 5.6994500918516051e-18,
 -5.4183658215955385e-19])
C2_CHEB = np.array([ 3.1461158539889131e-03,-2.7681300348280756e-17,-2.3087838845307520e-03, 1.0985818225329651e-18,
  5.7698207666912938e-05,-2.8076873991435124e-18, 3.5238862023665330e-04,-3.6900011459567068e-19,
  2.5246667458685058e-05,-1.0010031974883865e-18,-3.4428211971947325e-06,-1.2726250652961522e-18,
 -3.5350745566225057e-07,-2.2158568347827447e-18, 3.7308301838762416e-09, 3.4122889254911600e-19,
  1.2776951868273607e-09,-1.4251773544206264e-18, 2.1874615129364876e-11,-1.4481451840049186e-18,
 -1.9141420140279344e-12,-1.5074785162050336e-18,-6.5628856644273756e-14,-1.4732696631198479e-18,
  1.2582952105474553e-15,-1.4817430765157008e-18, 8.3013770645996781e-17,-2.5676113861134510e-18,
  1.4288334799925864e-18,-1.2970991667581739e-18, 9.7201219613724212e-19, 1.0472537032577899e-18,
 -5.7173507055932130e-19,-8.2102875868028649e-20, 1.4905315572151203e-18,-9.9187283419519751e-19,
  1.0528357824773459e-18,-2.0806244407076916e-18, 2.5078784930921042e-18,-5.4429145270364873e-19,
 -8.2968726643181682e-19])
C3_CHEB = np.array([ 2.6505060927825817e-16, 7.1232562214678551e-05, 2.2266517149722626e-16, 2.3234305298140296e-04,
 -1.3818193919524889e-15,-1.2929912045460125e-04, 4.9850205025865175e-16, 1.8074496413624369e-05,
 -1.1040393153466259e-16, 6.5261851872332051e-06, 1.6786850465369763e-17,-1.1696365378819740e-07,
 -5.6182503405560907e-19,-7.3494761264444537e-08,-7.1805610932541220e-19,-1.7750910077139713e-09,
  1.2633574578681664e-19, 2.5555529619564638e-10, 5.5028161909675219e-20, 1.1376636555019855e-11,
 -4.1215857759666342e-20,-3.3498616648900280e-13, 1.1990960747163655e-19,-2.5537103752483596e-14,
  1.1731508333233694e-19, 6.7764463370043482e-17, 2.6187008185239840e-20, 2.9835483184908003e-17,
  1.7730438222447856e-19, 2.3299461892420025e-19,-7.9735211999744563e-20, 4.7663106997076425e-20,
 -5.7096398738064666e-20, 1.0952801325075488e-20,-2.0701827183543337e-20, 5.7480579930656983e-20,
 -1.1829615533453324e-20,-2.2795455098192060e-21,-6.5062885433993265e-20,-4.4573744583838164e-20,
 -1.4815844043425300e-20])
