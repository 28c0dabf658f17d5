(function(){var r={657:function(r){function n(r){var n={};return r.filter(function(r){var t=typeof r+":"+String(r);if(n[t]){return false}n[t]=true;return true})}function t(r,n){var t={};for(var e=0;e<r.length;e++){var o=n(r[e]);if(!t[o]){t[o]=[]}t[o].push(r[e])}return t}function e(r,n){var t=[];for(var e=0;e<r.length;e+=n){t.push(r.slice(e,e+n))}return t}function o(r){var n=[];r.forEach(function(r){if(Object.prototype.toString.call(r)==="[object Array]"){n=n.concat(o(r))}else{n.push(r)}});return n}function u(r){var n=[];for(var t in r){if(Object.prototype.hasOwnProperty.call(r,t)){n.push(t)}}return n}function f(r){return u(r).map(function(n){return r[n]})}function a(r,n){var t=[];var e=[];for(var o=0;o<r.length;o++){(n(r[o])?t:e).push(r[o])}return[t,e]}function c(r,n){var t={};r.forEach(function(r){var e=n(r);t[e]=(t[e]||0)+1});return t}r.exports={uniq:n,groupBy:t,chunk:e,flatten:o}}};var n={};function t(e){var o=n[e];if(o!==undefined){return o.exports}var u=n[e]={exports:{}};r[e](u,u.exports,t);return u.exports}var e=t(657);console.log(e)})();