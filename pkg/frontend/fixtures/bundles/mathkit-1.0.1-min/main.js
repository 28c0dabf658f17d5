(function(){var r={169:function(r){function n(r,n,t){return Math.min(Math.max(r,n),t)}function t(r){var n=0;for(var t=0;t<r.length;t++){n+=r[t]}return n}function e(r){if(r.length===0){return 0}return t(r)/r.length}function a(r){var n=r[0];var t=r[0];for(var e=1;e<r.length;e++){if(r[e]>n){n=r[e]}if(r[e]<t){t=r[e]}}return n-t}function u(r){if(typeof r==="number"){return r}var n=parseFloat(String(r));return isNaN(n)?0:n}function o(r,n){var t=Math.pow(10,n||0);return Math.round(r*t)/t}function f(r,n,t){var e=[];var a=t||1;for(var u=r;a>0?u<n:u>n;u+=a){e.push(u)}return e}function i(r){if(r.length<2){return 0}var n=e(r);var t=0;for(var a=0;a<r.length;a++){t+=(r[a]-n)*(r[a]-n)}return t/(r.length-1)}r.exports={clamp:n,sum:t,mean:e,spread:a}}};var n={};function t(e){var a=n[e];if(a!==undefined){return a.exports}var u=n[e]={exports:{}};r[e](u,u.exports,t);return u.exports}var e=t(169);console.log(e)})();